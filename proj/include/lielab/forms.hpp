#pragma once

// Invariant symmetric bilinear forms on an algebra: the Killing form and, for
// matrix families, the trace form.

#include "lielab/derivations.hpp"

#include <optional>

namespace lielab {

class BilinearForm {
 public:
  BilinearForm(LieAlgebra g, Mat gram);

  const LieAlgebra& algebra() const { return g_; }
  const Mat& gram() const { return gram_; }
  bool nondegenerate() const { return rank_ == gram_.rows(); }
  Index rank() const { return rank_; }

  /// u^T G v
  Rational operator()(const Vec& u, const Vec& v) const;

 private:
  LieAlgebra g_;
  Mat gram_;
  Index rank_ = 0;
};

/// Gram(i, j) = trace(ad b_i * ad b_j).
BilinearForm killing_form(const LieAlgebra& g);

/// Gram(i, j) = trace(b_i * b_j); matrix families only.
BilinearForm trace_form(const LieAlgebra& g);

bool is_nondegenerate(const BilinearForm& f);

/// Inverse Gram matrix, present iff the form is nondegenerate.
std::optional<Mat> gram_inverse(const BilinearForm& f);

/// k([x,y],z) - k(x,[y,z])
Rational check_invariance(const BilinearForm& f, const Vec& x, const Vec& y, const Vec& z);

/// k(D x, y) + k(x, D y)
Rational check_derivation_invariance(const BilinearForm& f, const LinMap& d, const Vec& x, const Vec& y);

}  // namespace lielab
