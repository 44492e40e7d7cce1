#pragma once

// Derivations of a Lie algebra as the kernel of the Leibniz system, inner
// derivations ad(a), and the finite-size check of the classification
// Der = ad(g) for the classical families.

#include "lielab/lie_algebra.hpp"

#include <optional>
#include <vector>

namespace lielab {

/// Linear endomorphism of an algebra in basis coordinates. Flattening is
/// row-major: entry (r, c) sits at r * n + c, and column c is the image of
/// the c-th basis vector.
class LinMap {
 public:
  LinMap() = default;
  explicit LinMap(Mat m);

  static LinMap zero(Index n) { return LinMap(zero_matrix<Rational>(n, n)); }
  static LinMap identity(Index n);
  static LinMap from_flat(const Vec& flat, Index n);

  Index dim() const { return m_.rows(); }
  const Mat& matrix() const { return m_; }
  Vec flatten() const;

  Vec operator()(const Vec& x) const;

  friend LinMap operator+(const LinMap& a, const LinMap& b) { return LinMap(Mat(a.m_ + b.m_)); }
  friend LinMap operator-(const LinMap& a, const LinMap& b) { return LinMap(Mat(a.m_ - b.m_)); }
  friend LinMap operator*(const Rational& s, const LinMap& a) { return LinMap(Mat(s * a.m_)); }
  friend LinMap compose(const LinMap& a, const LinMap& b) { return LinMap(Mat(a.m_ * b.m_)); }
  friend bool operator==(const LinMap& a, const LinMap& b) {
    return a.m_.rows() == b.m_.rows() && a.m_.cols() == b.m_.cols() && a.m_ == b.m_;
  }

 private:
  Mat m_;
};

/// D([u,v]) - [D u, v] - [u, D v].
Vec leibniz_residual(const LieAlgebra& g, const LinMap& d, const Vec& u, const Vec& v);

bool is_derivation(const LieAlgebra& g, const LinMap& d);

/// x -> [a, x].
LinMap inner_derivation(const LieAlgebra& g, const Vec& a);

/// A subspace of the n*n flattened maps of an algebra.
class DerivationSpace {
 public:
  DerivationSpace(LieAlgebra g, Subspace basis);

  const LieAlgebra& algebra() const { return g_; }
  const Subspace& basis() const { return basis_; }
  Index dim() const { return basis_.dim(); }
  LinMap element(Index k) const;

  /// sum_k c_k * element(k)
  LinMap combine(const Vec& c) const;

  /// c with combine(c) == d, or nullopt if d is outside the space.
  std::optional<Vec> coefficients(const LinMap& d) const;

 private:
  LieAlgebra g_;
  Subspace basis_;
};

/// Kernel of the Leibniz system over basis pairs i < j.
DerivationSpace derivation_space(const LieAlgebra& g);

/// Span of ad(b_i) over the basis.
DerivationSpace inner_space(const LieAlgebra& g);

/// dim M_n/F1 = n^2 - 1 for sl, 2n^2 - n for o, 2n^2 + n for sp.
Index expected_derivation_dim(const AlgebraSpec& spec);

struct ClassificationCheck {
  Index derivation_dim = 0;
  Index expected_dim = 0;  // -1 for custom algebras, which have no classification target
  Index inner_dim = 0;
  bool inner_in_der = false;
  bool der_in_inner = false;
  /// preimages[k] = a with ad(a) equal to the k-th derivation basis element
  /// (present when der_in_inner holds).
  std::vector<Vec> preimages;

  bool passed() const { return derivation_dim == expected_dim && inner_in_der && der_in_inner; }
};

ClassificationCheck check_classification(const LieAlgebra& g, const DerivationSpace& der);
ClassificationCheck check_classification(const LieAlgebra& g);

/// a with ad(a) == d, or nullopt when d is not inner.
std::optional<Vec> inner_preimage(const LieAlgebra& g, const LinMap& d);

}  // namespace lielab
