#pragma once

// Lie algebra realizations in coordinates: the matrix families sl_J, o_{J,J}
// and sp_J at finite J, and abstract algebras given by structure constants.

#include "lielab/exact_linalg.hpp"
#include "lielab/matrix_units.hpp"

#include <memory>
#include <string>
#include <vector>

namespace lielab {

enum class Family { sl, o, sp, custom };

std::string to_string(Family f);
Family parse_family(const std::string& name);

/// Structure constants c(i, j, k) with [b_i, b_j] = sum_k c(i, j, k) b_k.
class StructureConstants {
 public:
  StructureConstants() = default;
  explicit StructureConstants(Index dim);

  Index dim() const { return dim_; }
  const Rational& operator()(Index i, Index j, Index k) const { return dense_[flat(i, j, k)]; }
  void set(Index i, Index j, Index k, const Rational& v);

  /// Nonzero (k, c(i, j, k)) for the pair (i, j).
  const SparseRow<Rational>& bracket_of_basis(Index i, Index j) const { return sparse_[i * dim_ + j]; }

  /// c(i, j, .) as a dense vector.
  Vec bracket_vector(Index i, Index j) const;

  friend bool operator==(const StructureConstants& a, const StructureConstants& b) {
    return a.dim_ == b.dim_ && a.dense_ == b.dense_;
  }

 private:
  std::size_t flat(Index i, Index j, Index k) const {
    return static_cast<std::size_t>((i * dim_ + j) * dim_ + k);
  }

  Index dim_ = 0;
  std::vector<Rational> dense_;
  std::vector<SparseRow<Rational>> sparse_;
};

/// Description of an algebra to build. Matrix families carry a positive
/// index set J; custom algebras carry their structure constants.
struct AlgebraSpec {
  Family family = Family::sl;
  IndexSet indices;
  StructureConstants constants;  // custom only

  static AlgebraSpec sl(int n) { return {Family::sl, IndexSet::first(n), {}}; }
  static AlgebraSpec o(int n) { return {Family::o, IndexSet::first(n), {}}; }
  static AlgebraSpec sp(int n) { return {Family::sp, IndexSet::first(n), {}}; }
  static AlgebraSpec custom(StructureConstants c) { return {Family::custom, {}, std::move(c)}; }
  static AlgebraSpec family_member(Family f, int n);

  friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
};

/// Short label such as "sl3", "o2", "sp2" or "custom(dim 3)".
std::string label(const AlgebraSpec& spec);

/// An immutable Lie algebra realization with a fixed ordered basis. Copies
/// share the underlying data.
class LieAlgebra {
 public:
  /// Builds and validates. Throws UsageError/Unsupported on a bad spec and
  /// AxiomViolation on invalid custom constants.
  static LieAlgebra build(const AlgebraSpec& spec);

  const AlgebraSpec& spec() const { return d_->spec; }
  Family family() const { return d_->spec.family; }
  bool is_matrix_family() const { return family() != Family::custom; }
  Index dim() const { return d_->dim; }

  /// J for sl, 2J for o and sp, empty for custom.
  const IndexSet& ambient_indices() const { return d_->ambient; }
  const std::vector<FinMatrix>& basis() const { return d_->basis; }
  const StructureConstants& constants() const { return d_->constants; }

  /// Throws NotInAlgebra when x is outside the span of the basis.
  Vec coords(const FinMatrix& x) const;
  FinMatrix from_coords(const Vec& v) const;

  Vec unit_vector(Index k) const;
  Vec bracket(const Vec& u, const Vec& v) const;

  /// Matrix of x -> [a, x] in basis coordinates.
  Mat ad(const Vec& a) const;
  Mat ad_basis(Index i) const;

  /// Coordinate functionals: coords(x)_k = sum over (position, weight) in
  /// functional(k) of weight * x(position). Exported for auditing.
  struct Functional {
    std::vector<std::pair<FinMatrix::Key, Rational>> terms;
  };
  const std::vector<Functional>& coordinate_functionals() const { return d_->functionals; }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.d_ == b.d_ || a.spec() == b.spec();
  }

 private:
  struct Data {
    AlgebraSpec spec;
    Index dim = 0;
    IndexSet ambient;
    std::vector<FinMatrix> basis;
    StructureConstants constants;
    std::vector<Functional> functionals;
  };

  friend LieAlgebra build_sl(const IndexSet&);
  friend LieAlgebra build_o(const IndexSet&);
  friend LieAlgebra build_sp(const IndexSet&);
  friend LieAlgebra build_custom(StructureConstants);

  explicit LieAlgebra(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  static LieAlgebra from_matrix_basis(AlgebraSpec spec, IndexSet ambient, std::vector<FinMatrix> basis);

  std::shared_ptr<const Data> d_;
};

LieAlgebra build_sl(const IndexSet& set);
LieAlgebra build_o(const IndexSet& set);
LieAlgebra build_sp(const IndexSet& set);
LieAlgebra build_custom(StructureConstants constants);

/// Throws AxiomViolation naming the first (i, j, k) where antisymmetry or the
/// Jacobi identity fails.
void validate_axioms(const StructureConstants& c);

/// Coordinates of [[b_i,b_j],b_k] + [[b_j,b_k],b_i] + [[b_k,b_i],b_j].
Vec jacobi_residual(const StructureConstants& c, Index i, Index j, Index k);

/// Coordinates in `big` of the element with coordinates v in `small`.
Vec embed(const LieAlgebra& small, const LieAlgebra& big, const Vec& v);

/// Coordinates in `small` of the projection of the element v of `big` onto
/// the index block of `small`. For sl the projected diagonal is shifted by a
/// multiple of the identity so that the result is traceless.
Vec restrict_to(const LieAlgebra& big, const LieAlgebra& small, const Vec& v);

/// Ideal generated by v: the smallest subspace containing v and closed under
/// brackets with every basis element.
Subspace generated_ideal(const LieAlgebra& g, const Vec& v);

/// Chain of algebras of one family over strictly increasing index sets.
class Tower {
 public:
  static Tower build(Family family, const std::vector<IndexSet>& chain);
  static Tower consecutive(Family family, int from, int to);

  Family family() const { return family_; }
  std::size_t size() const { return levels_.size(); }
  const LieAlgebra& level(std::size_t k) const { return levels_[k]; }

  Vec embed(std::size_t from, std::size_t to, const Vec& v) const;
  Vec restrict_to(std::size_t from, std::size_t to, const Vec& v) const;

 private:
  Family family_ = Family::sl;
  std::vector<LieAlgebra> levels_;
};

struct RootSpace {
  Vec root;  // eigenvalue on each Cartan basis vector
  Subspace space;
};

struct RootDecomposition {
  Subspace cartan;
  std::vector<RootSpace> roots;  // sorted lexicographically by root
};

/// Span of the diagonal basis elements of a matrix-family algebra.
Subspace standard_cartan(const LieAlgebra& g);

/// Simultaneous eigenspace decomposition of g under ad of the Cartan basis.
/// Throws NotAbelian, NotDiagonalizable (irrational spectrum or a Jordan
/// block) or StructureError (zero weight space larger than the Cartan).
RootDecomposition root_decomposition(const LieAlgebra& g, const Subspace& cartan);

/// True iff [g_a, g_b] lies in g_{a+b} (the Cartan when a+b = 0, zero when
/// a+b is not a root) for every pair of computed roots.
bool check_root_brackets(const LieAlgebra& g, const RootDecomposition& rd);

}  // namespace lielab
