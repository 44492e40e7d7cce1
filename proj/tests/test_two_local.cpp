#include "doctest.h"

#include "lielab/error.hpp"
#include "lielab/locality.hpp"
#include "lielab/sampling.hpp"

using namespace lielab;

namespace {

Vec v3(long a, long b, long c) { return (Vec(3) << Rational(a), Rational(b), Rational(c)).finished(); }

struct Sl2 {
  LieAlgebra g = build_sl(IndexSet{1, 2});
  DerivationSpace der = derivation_space(g);
  BilinearForm kappa = killing_form(g);
};

}  // namespace

TEST_CASE("two-local pair witnesses") {
  Sl2 s;
  const Vec a = v3(1, -1, 2);
  const TwoLocalMap inner = TwoLocalMap::inner(a);
  Rng rng(71);
  for (int t = 0; t < 20; ++t) CHECK(feasible(two_local_witness(s.der, inner, random_vector(3, rng), random_vector(3, rng))));

  const auto w = two_local_witness(s.der, TwoLocalMap::identity(), v3(0, 1, 0), v3(1, 0, 0));
  CHECK_FALSE(feasible(w));

  std::vector<std::pair<Vec, Vec>> values;
  for (const Vec& p : {v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1), v3(1, 1, 0)}) values.emplace_back(p, s.g.bracket(a, p));
  const TwoLocalMap table = TwoLocalMap::table(values);
  for (const auto& [p, _] : values)
    for (const auto& [q, __] : values) CHECK(feasible(two_local_witness(s.der, table, p, q)));
  CHECK_THROWS_AS(table(s.g, v3(5, 5, 5)), ProbeSetError);
}

TEST_CASE("additivity residuals") {
  Sl2 s;
  const Vec x = v3(1, 0, 0), y = v3(0, 1, 0);
  CHECK(is_zero_vector(two_local_additivity_check(s.kappa, TwoLocalMap::inner(v3(2, 1, 0)), x, y)));
  CHECK(is_zero_vector(two_local_additivity_check(s.kappa, TwoLocalMap::identity(), x, y)));

  // Linear on x and y but the value at x + y is off by e.
  const Vec a = v3(0, 1, 1);
  const TwoLocalMap perturbed = TwoLocalMap::table({{x, s.g.bracket(a, x)},
                                                    {y, s.g.bracket(a, y)},
                                                    {Vec(x + y), Vec(s.g.bracket(a, Vec(x + y)) + v3(1, 0, 0))}});
  const Vec r = two_local_additivity_check(s.kappa, perturbed, x, y);
  CHECK(r == Vec(s.kappa.gram().row(0).transpose()));
  CHECK(r == v3(0, 0, 4));

  const Vec z = v3(0, 0, 0);
  const TwoLocalMap at_zero = TwoLocalMap::table({{z, z}});
  CHECK(is_zero_vector(two_local_additivity_check(s.kappa, at_zero, z, z)));

  const LieAlgebra ab = build_custom(StructureConstants(2));
  CHECK_THROWS_AS(two_local_additivity_check(killing_form(ab), TwoLocalMap::identity(),
                                             ab.unit_vector(0), ab.unit_vector(1)),
                  FormError);
}

TEST_CASE("homogeneity residuals") {
  Sl2 s;
  Rng rng(72);
  const TwoLocalMap inner = TwoLocalMap::inner(v3(1, 2, 3));
  for (int t = 0; t < 20; ++t) {
    const Vec x = random_vector(3, rng);
    CHECK(is_zero_vector(two_local_homogeneity_check(s.g, inner, Rational(1), x)));
    CHECK(is_zero_vector(two_local_homogeneity_check(s.g, inner, Rational(3), x)));
    // lambda = 0: the rule must vanish at 0, as any derivation does.
    CHECK(is_zero_vector(two_local_homogeneity_check(s.g, inner, Rational(0), x)));
  }
  const TwoLocalMap branch = TwoLocalMap::branching_inner(v3(0, 0, 0), v3(1, 0, 0), 1);
  CHECK(is_zero_vector(two_local_homogeneity_check(s.g, branch, Rational(2), v3(1, 1, 1))));
}

TEST_CASE("pipeline recovers inner maps") {
  Sl2 s;
  Rng rng(73);
  for (int t = 0; t < 10; ++t) {
    const Vec a = random_vector(3, rng);
    const TwoLocalResult r = two_local_to_derivation(s.der, s.kappa, TwoLocalMap::inner(a));
    REQUIRE(r.derivation);
    CHECK(r.verdict() == Verdict::proven_equal);
    CHECK(r.recovered == inner_derivation(s.g, a));
    CHECK(s.der.combine(r.coefficients) == r.recovered);
    CHECK_FALSE(r.refutation.has_value());
  }
}

TEST_CASE("pipeline refutes the identity at h") {
  Sl2 s;
  const TwoLocalResult r = two_local_to_derivation(s.der, s.kappa, TwoLocalMap::identity());
  CHECK_FALSE(r.derivation);
  REQUIRE(r.refutation.has_value());
  CHECK(r.refutation->stage == "pair-witness");
  REQUIRE(r.refutation->infeasible_pair.has_value());
  CHECK(r.refutation->infeasible_pair->first == v3(0, 1, 0));
  const Vec& y = *r.refutation->infeasibility_certificate;
  const auto& [p, q] = *r.refutation->infeasible_pair;
  for (Index k = 0; k < s.der.dim(); ++k) {
    const LinMap d = s.der.element(k);
    CHECK(y.head(3).dot(d(p)) + y.tail(3).dot(d(q)) == 0);
  }
  CHECK(y.head(3).dot(p) + y.tail(3).dot(q) == 1);
}

TEST_CASE("pipeline refutes a branching rule at additivity") {
  Sl2 s;
  const TwoLocalMap branch = TwoLocalMap::branching_inner(v3(0, 0, 0), v3(1, 0, 0), 0);
  const TwoLocalResult r = two_local_to_derivation(s.der, s.kappa, branch);
  REQUIRE(r.refutation.has_value());
  CHECK(r.refutation->stage == "additivity");
  CHECK(r.refutation->points[0] == v3(1, 0, 0));
  CHECK(r.refutation->points[1] == v3(0, 1, 0));
  // nabla(e + h) = [e, e + h] = -2e while nabla(e) = nabla(h) = 0; the Gram
  // matrix sends -2e to (0, 0, -8).
  CHECK(r.refutation->residual == v3(0, 0, -8));
}

TEST_CASE("property: accepted rules give derivations with witnesses on random pairs") {
  for (const auto& spec : {AlgebraSpec::sl(3), AlgebraSpec::o(2), AlgebraSpec::sp(2)}) {
    CAPTURE(label(spec));
    const LieAlgebra g = LieAlgebra::build(spec);
    const DerivationSpace der = derivation_space(g);
    const BilinearForm kappa = killing_form(g);
    Rng rng(74);
    const Vec a = random_vector(g.dim(), rng);
    const TwoLocalMap nabla = TwoLocalMap::inner(a);
    TwoLocalOptions options;
    options.random_pairs = 200;
    options.seed = 75;
    const TwoLocalResult r = two_local_to_derivation(der, kappa, nabla, options);
    REQUIRE(r.derivation);
    CHECK(is_derivation(g, r.recovered));
    for (int t = 0; t < 200; ++t) {
      CHECK(feasible(two_local_witness(der, nabla, random_sparse_vector(g.dim(), rng),
                                       random_sparse_vector(g.dim(), rng))));
    }
  }
}
