#include "lielab/forms.hpp"

#include "lielab/error.hpp"

namespace lielab {

BilinearForm::BilinearForm(LieAlgebra g, Mat gram) : g_(std::move(g)), gram_(std::move(gram)) {
  if (gram_.rows() != g_.dim() || gram_.cols() != g_.dim()) throw UsageError("Gram matrix shape mismatch");
  if (gram_ != gram_.transpose()) throw UsageError("Gram matrix is not symmetric");
  rank_ = lielab::rank(gram_);
}

Rational BilinearForm::operator()(const Vec& u, const Vec& v) const {
  if (u.size() != g_.dim() || v.size() != g_.dim()) throw UsageError("bilinear form: argument length mismatch");
  Rational s = 0;
  for (Index i = 0; i < u.size(); ++i) {
    if (u[i].is_zero()) continue;
    for (Index j = 0; j < v.size(); ++j) {
      if (!v[j].is_zero() && !gram_(i, j).is_zero()) s += u[i] * gram_(i, j) * v[j];
    }
  }
  return s;
}

BilinearForm killing_form(const LieAlgebra& g) {
  const Index n = g.dim();
  std::vector<Mat> ads;
  ads.reserve(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) ads.push_back(g.ad_basis(i));
  Mat gram = zero_matrix<Rational>(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i; j < n; ++j) {
      Rational t = 0;
      for (Index k = 0; k < n; ++k) {
        for (Index l = 0; l < n; ++l) {
          const auto& a = ads[static_cast<std::size_t>(i)](k, l);
          if (a.is_zero()) continue;
          const auto& b = ads[static_cast<std::size_t>(j)](l, k);
          if (!b.is_zero()) t += a * b;
        }
      }
      gram(i, j) = t;
      gram(j, i) = t;
    }
  }
  return BilinearForm(g, std::move(gram));
}

BilinearForm trace_form(const LieAlgebra& g) {
  if (!g.is_matrix_family()) throw Unsupported("trace form needs a matrix-family algebra");
  const Index n = g.dim();
  Mat gram = zero_matrix<Rational>(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i; j < n; ++j) {
      const Rational t = trace(mul(g.basis()[static_cast<std::size_t>(i)], g.basis()[static_cast<std::size_t>(j)]));
      gram(i, j) = t;
      gram(j, i) = t;
    }
  }
  return BilinearForm(g, std::move(gram));
}

bool is_nondegenerate(const BilinearForm& f) { return f.nondegenerate(); }

std::optional<Mat> gram_inverse(const BilinearForm& f) {
  if (!f.nondegenerate()) return std::nullopt;
  const Index n = f.gram().rows();
  Mat augmented = zero_matrix<Rational>(n, 2 * n);
  augmented.leftCols(n) = f.gram();
  for (Index i = 0; i < n; ++i) augmented(i, n + i) = 1;
  const auto reduced = rref(augmented);
  return Mat(reduced.reduced.rightCols(n));
}

Rational check_invariance(const BilinearForm& f, const Vec& x, const Vec& y, const Vec& z) {
  const auto& g = f.algebra();
  return f(g.bracket(x, y), z) - f(x, g.bracket(y, z));
}

Rational check_derivation_invariance(const BilinearForm& f, const LinMap& d, const Vec& x, const Vec& y) {
  return f(d(x), y) + f(x, d(y));
}

}  // namespace lielab
