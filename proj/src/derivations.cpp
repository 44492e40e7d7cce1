#include "lielab/derivations.hpp"

#include "lielab/error.hpp"

#include <map>

namespace lielab {

LinMap::LinMap(Mat m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw UsageError("LinMap must be square");
}

LinMap LinMap::identity(Index n) {
  Mat m = zero_matrix<Rational>(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = 1;
  return LinMap(std::move(m));
}

LinMap LinMap::from_flat(const Vec& flat, Index n) {
  if (flat.size() != n * n) throw UsageError("LinMap::from_flat: length is not n*n");
  Mat m(n, n);
  for (Index r = 0; r < n; ++r) {
    for (Index c = 0; c < n; ++c) m(r, c) = flat[r * n + c];
  }
  return LinMap(std::move(m));
}

Vec LinMap::flatten() const {
  const Index n = dim();
  Vec flat(n * n);
  for (Index r = 0; r < n; ++r) {
    for (Index c = 0; c < n; ++c) flat[r * n + c] = m_(r, c);
  }
  return flat;
}

Vec LinMap::operator()(const Vec& x) const {
  if (x.size() != dim()) throw UsageError("LinMap: argument length mismatch");
  Vec out = zero_vector<Rational>(dim());
  for (Index c = 0; c < dim(); ++c) {
    if (x[c].is_zero()) continue;
    for (Index r = 0; r < dim(); ++r) {
      if (!m_(r, c).is_zero()) out[r] += m_(r, c) * x[c];
    }
  }
  return out;
}

Vec leibniz_residual(const LieAlgebra& g, const LinMap& d, const Vec& u, const Vec& v) {
  if (d.dim() != g.dim()) throw UsageError("leibniz_residual: map dimension mismatch");
  return d(g.bracket(u, v)) - g.bracket(d(u), v) - g.bracket(u, d(v));
}

bool is_derivation(const LieAlgebra& g, const LinMap& d) {
  for (Index i = 0; i < g.dim(); ++i) {
    for (Index j = i + 1; j < g.dim(); ++j) {
      if (!is_zero_vector(leibniz_residual(g, d, g.unit_vector(i), g.unit_vector(j)))) return false;
    }
  }
  return true;
}

LinMap inner_derivation(const LieAlgebra& g, const Vec& a) { return LinMap(g.ad(a)); }

DerivationSpace::DerivationSpace(LieAlgebra g, Subspace basis) : g_(std::move(g)), basis_(std::move(basis)) {
  if (basis_.ambient() != g_.dim() * g_.dim()) throw UsageError("DerivationSpace: ambient is not n*n");
}

LinMap DerivationSpace::element(Index k) const { return LinMap::from_flat(basis_.vector(k), g_.dim()); }

LinMap DerivationSpace::combine(const Vec& c) const {
  if (c.size() != dim()) throw UsageError("DerivationSpace::combine: coefficient length mismatch");
  Vec flat = zero_vector<Rational>(basis_.ambient());
  for (Index k = 0; k < dim(); ++k) {
    if (!c[k].is_zero()) flat += c[k] * basis_.vector(k);
  }
  return LinMap::from_flat(flat, g_.dim());
}

std::optional<Vec> DerivationSpace::coefficients(const LinMap& d) const { return basis_.coordinates(d.flatten()); }

DerivationSpace derivation_space(const LieAlgebra& g) {
  const Index n = g.dim();
  const auto& c = g.constants();
  EchelonBuilder<Rational> system(n * n);
  // Row (i, j, m) is the m-th coordinate of D([b_i,b_j]) - [D b_i, b_j] - [b_i, D b_j]
  // as a linear form in the entries D(r, s) at r * n + s.
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      for (Index m = 0; m < n; ++m) {
        std::map<Index, Rational> row;
        for (const auto& [k, v] : c.bracket_of_basis(i, j)) row[m * n + k] += v;
        for (Index p = 0; p < n; ++p) {
          if (!c(p, j, m).is_zero()) row[p * n + i] -= c(p, j, m);
          if (!c(i, p, m).is_zero()) row[p * n + j] -= c(i, p, m);
        }
        SparseRow<Rational> sparse;
        for (auto& [col, v] : row) {
          if (!v.is_zero()) sparse.emplace_back(col, std::move(v));
        }
        if (!sparse.empty()) system.insert(sparse);
      }
    }
  }
  return DerivationSpace(g, Subspace::null_space_of(system));
}

DerivationSpace inner_space(const LieAlgebra& g) {
  EchelonBuilder<Rational> builder(g.dim() * g.dim());
  for (Index i = 0; i < g.dim(); ++i) builder.insert_dense(LinMap(g.ad_basis(i)).flatten());
  return DerivationSpace(g, Subspace::from_builder(builder));
}

Index expected_derivation_dim(const AlgebraSpec& spec) {
  const auto n = static_cast<Index>(spec.indices.size());
  switch (spec.family) {
    case Family::sl: return n * n - 1;
    case Family::o: return 2 * n * n - n;
    case Family::sp: return 2 * n * n + n;
    case Family::custom: break;
  }
  throw Unsupported("no classification target for custom algebras");
}

std::optional<Vec> inner_preimage(const LieAlgebra& g, const LinMap& d) {
  const Index n = g.dim();
  Mat ads(n * n, n);
  for (Index i = 0; i < n; ++i) ads.col(i) = LinMap(g.ad_basis(i)).flatten();
  auto a = solve(ads, d.flatten());
  if (a && !(inner_derivation(g, *a) == d)) throw Error("inner_preimage: solution does not reproduce the map");
  return a;
}

ClassificationCheck check_classification(const LieAlgebra& g, const DerivationSpace& der) {
  const DerivationSpace inner = inner_space(g);
  ClassificationCheck out;
  out.derivation_dim = der.dim();
  out.expected_dim = g.is_matrix_family() ? expected_derivation_dim(g.spec()) : -1;
  out.inner_dim = inner.dim();
  out.inner_in_der = subspace_contains(der.basis(), inner.basis());
  out.der_in_inner = subspace_contains(inner.basis(), der.basis());
  if (out.der_in_inner) {
    for (Index k = 0; k < der.dim(); ++k) out.preimages.push_back(*inner_preimage(g, der.element(k)));
  }
  return out;
}

ClassificationCheck check_classification(const LieAlgebra& g) { return check_classification(g, derivation_space(g)); }

}  // namespace lielab
