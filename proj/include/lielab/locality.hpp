#pragma once

// Local and 2-local derivations.
//
// A linear map is a local derivation when at every point x some derivation
// agrees with it at x. The set of local derivations is sandwiched as
// Der <= LocDer <= L, where L collects the linear maps satisfying the
// pointwise condition at finitely many sample points. Checking L <= Der
// therefore proves LocDer = Der; failing that the result is inconclusive,
// never a claimed counterexample.

#include "lielab/derivations.hpp"
#include "lielab/forms.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace lielab {

/// Coefficients over the derivation basis, or a left-kernel certificate
/// that no combination matches.
using WitnessOutcome = SolveOutcome<Rational>;

inline bool feasible(const WitnessOutcome& w) { return std::holds_alternative<Vec>(w); }

/// n x d matrix whose k-th column is D_k(x).
Mat evaluation_matrix(const DerivationSpace& der, const Vec& x);

/// Derivation coefficients c with (sum c_k D_k)(x) = delta(x).
WitnessOutcome witness_at(const DerivationSpace& der, const LinMap& delta, const Vec& x);

/// The linear condition delta(x) in W_x = { D(x) : D in Der } on maps delta.
struct PointCondition {
  Vec point;
  Subspace image;    // W_x
  Mat constraints;   // rows over flattened maps; delta admissible iff rows . flat(delta) = 0

  /// Admissible maps, as a subspace of the flattened map space.
  Subspace space() const;
  bool admits(const LinMap& delta) const;
};

PointCondition point_condition(const DerivationSpace& der, const Vec& x);

struct LocalDerBound {
  Subspace space;                 // L
  std::vector<Vec> points;        // sample points in schedule order
  std::vector<Index> point_dims;  // dim L after each point
  std::vector<Index> round_dims;  // dim L after each round
  int rounds = 0;
  std::uint64_t seed = 0;
};

/// Intersects point conditions over the schedule: round 1 the basis
/// vectors, round 2 all pairwise sums b_i + b_j, later rounds dim g seeded
/// random sparse vectors each. Stops once dim L has been unchanged for three
/// consecutive rounds, or after max_rounds.
LocalDerBound local_der_bound(const DerivationSpace& der, std::uint64_t seed, int max_rounds = 8);

enum class Verdict { proven_equal, inconclusive };

std::string to_string(Verdict v);

struct Certificate {
  Verdict verdict = Verdict::inconclusive;
  /// proven_equal: expansions[k] holds the derivation-basis coefficients of
  /// the k-th basis vector of L.
  std::vector<Vec> expansions;
  /// inconclusive: canonical basis of L modulo Der.
  Subspace excess;
};

Certificate certify_locder_equals_der(const DerivationSpace& der, const LocalDerBound& bound);

/// x -> restrict(delta(embed(x))) on the smaller algebra of a tower.
LinMap restrict_local(const LieAlgebra& big, const LieAlgebra& small, const LinMap& delta);

/// Positive labels i such that i or -i occurs in the support of some
/// element: the smallest I whose algebra g_I holds all of them (given they
/// lie in the family at all). This is the finite subset used to pass from
/// g_J to a finite-dimensional subalgebra.
IndexSet covering_index_set(const std::vector<FinMatrix>& elements);

/// A map given pointwise, not necessarily linear.
class TwoLocalMap {
 public:
  static TwoLocalMap inner(Vec a);
  static TwoLocalMap identity();
  /// [a_zero, x] when x[coordinate] == 0, else [a_nonzero, x].
  static TwoLocalMap branching_inner(Vec a_zero, Vec a_nonzero, Index coordinate = 0);
  /// Finite table; evaluation outside it throws ProbeSetError.
  static TwoLocalMap table(std::vector<std::pair<Vec, Vec>> values);

  Vec operator()(const LieAlgebra& g, const Vec& x) const;
  std::string rule() const;

 private:
  struct Inner {
    Vec a;
  };
  struct Identity {};
  struct Branching {
    Vec a_zero, a_nonzero;
    Index coordinate;
  };
  struct Table {
    std::vector<std::pair<Vec, Vec>> values;
  };
  std::variant<Inner, Identity, Branching, Table> rule_;
};

/// One derivation matching nabla at both x and y.
WitnessOutcome two_local_witness(const DerivationSpace& der, const TwoLocalMap& nabla, const Vec& x, const Vec& y);

/// (k(r, b_k))_k with r = nabla(x+y) - nabla(x) - nabla(y). Throws FormError
/// when the form is degenerate.
Vec two_local_additivity_check(const BilinearForm& kappa, const TwoLocalMap& nabla, const Vec& x, const Vec& y);

/// nabla(lambda x) - lambda nabla(x)
Vec two_local_homogeneity_check(const LieAlgebra& g, const TwoLocalMap& nabla, const Rational& lambda, const Vec& x);

struct TwoLocalRefutation {
  std::string stage;        // pair-witness, additivity, homogeneity, probe-witness, linearity, leibniz
  std::vector<Vec> points;  // the failing probe
  Vec residual;             // stage-specific residual, empty when not applicable
  Rational lambda = 0;      // homogeneity only
  /// Failing pair and its infeasibility certificate: y . (D_k x stacked D_k y) = 0
  /// for all k while y . (nabla(x) stacked nabla(y)) = 1.
  std::optional<std::pair<Vec, Vec>> infeasible_pair;
  std::optional<Vec> infeasibility_certificate;
};

struct TwoLocalOptions {
  std::size_t random_pairs = 0;  // extra seeded pair witnesses beyond the probe set
  std::uint64_t seed = 0;
};

struct TwoLocalResult {
  bool derivation = false;
  LinMap recovered;                          // assembled from nabla on the basis
  Vec coefficients;                          // over the derivation basis
  std::optional<TwoLocalRefutation> refutation;
  std::size_t pairs_checked = 0;
  std::size_t probes_checked = 0;

  Verdict verdict() const { return derivation ? Verdict::proven_equal : Verdict::inconclusive; }
};

/// Follows the linearity argument: pair witnesses on basis pairs, additivity
/// through the nondegenerate form, homogeneity for lambda in {-1, 2, 1/2};
/// then assembles the linear map from basis values and checks it is a
/// derivation. Any failure yields a refutation naming the failing probe.
TwoLocalResult two_local_to_derivation(const DerivationSpace& der, const BilinearForm& kappa,
                                       const TwoLocalMap& nabla, const TwoLocalOptions& options = {});

}  // namespace lielab
