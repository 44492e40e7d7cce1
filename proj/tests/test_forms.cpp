#include "doctest.h"

#include "lielab/derivations.hpp"
#include "lielab/error.hpp"
#include "lielab/forms.hpp"
#include "lielab/sampling.hpp"
#include "oracles.hpp"

using namespace lielab;

namespace {

const Vec& e() {
  static const Vec v = (Vec(3) << Rational(1), Rational(0), Rational(0)).finished();
  return v;
}
const Vec& h() {
  static const Vec v = (Vec(3) << Rational(0), Rational(1), Rational(0)).finished();
  return v;
}
const Vec& f() {
  static const Vec v = (Vec(3) << Rational(0), Rational(0), Rational(1)).finished();
  return v;
}

}  // namespace

TEST_CASE("Killing form on sl2 matches hand-written ad matrices") {
  const LieAlgebra sl2 = build_sl(IndexSet{1, 2});
  const BilinearForm k = killing_form(sl2);
  const oracle::Dense ad[3] = {oracle::sl2_ad_e(), oracle::sl2_ad_h(), oracle::sl2_ad_f()};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(k.gram()(i, j) == oracle::trace(oracle::mul(ad[i], ad[j])));
  CHECK(k(h(), h()) == 8);
  CHECK(k(e(), e()) == 0);
  CHECK(k(e(), f()) == 4);
  CHECK(oracle::det(oracle::from_eigen(k.gram())) == -128);
  CHECK(is_nondegenerate(k));
}

TEST_CASE("trace form on sl2") {
  const LieAlgebra sl2 = build_sl(IndexSet{1, 2});
  const BilinearForm t = trace_form(sl2);
  CHECK(t(e(), f()) == 1);
  CHECK(t(e(), e()) == 0);
  CHECK(killing_form(sl2).gram() == Mat(Rational(4) * t.gram()));
}

TEST_CASE("abelian algebras have a zero Killing form") {
  const LieAlgebra ab = build_custom(StructureConstants(3));
  const BilinearForm k = killing_form(ab);
  CHECK(k.gram() == zero_matrix<Rational>(3, 3));
  CHECK_FALSE(is_nondegenerate(k));
  CHECK_FALSE(gram_inverse(k).has_value());
  CHECK_THROWS_AS(trace_form(ab), Unsupported);
}

TEST_CASE("nondegeneracy") {
  const LieAlgebra sp2 = build_sp(IndexSet{1, 2});
  CHECK(is_nondegenerate(killing_form(sp2)));
  const auto inv = gram_inverse(killing_form(sp2));
  REQUIRE(inv.has_value());
  CHECK(Mat(killing_form(sp2).gram() * *inv) == Mat(Mat::Identity(10, 10)));
  CHECK(oracle::rank(oracle::from_eigen(killing_form(sp2).gram())) == 10);
}

TEST_CASE("invariance examples") {
  const LieAlgebra sl2 = build_sl(IndexSet{1, 2});
  const BilinearForm k = killing_form(sl2);
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 3; ++j)
      for (Index l = 0; l < 3; ++l)
        CHECK(check_invariance(k, sl2.unit_vector(i), sl2.unit_vector(j), sl2.unit_vector(l)) == 0);

  const LieAlgebra sp2 = build_sp(IndexSet{1, 2});
  const BilinearForm t = trace_form(sp2);
  Rng rng(41);
  for (int n = 0; n < 200; ++n) {
    CHECK(check_invariance(t, random_vector(10, rng), random_vector(10, rng), random_vector(10, rng)) == 0);
  }
}

TEST_CASE("derivation invariance examples") {
  const LieAlgebra sl2 = build_sl(IndexSet{1, 2});
  const BilinearForm k = killing_form(sl2);
  CHECK(check_derivation_invariance(k, LinMap::zero(3), e(), f()) == 0);
  const LinMap ad_e = inner_derivation(sl2, e());
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 3; ++j) CHECK(check_derivation_invariance(k, ad_e, sl2.unit_vector(i), sl2.unit_vector(j)) == 0);
  // A non-derivation generally fails.
  CHECK(check_derivation_invariance(k, LinMap::identity(3), e(), f()) != 0);

  const LieAlgebra so4 = build_o(IndexSet{1, 2});
  const BilinearForm k4 = killing_form(so4);
  const DerivationSpace der = derivation_space(so4);
  for (Index d = 0; d < der.dim(); ++d)
    for (Index i = 0; i < 6; ++i)
      for (Index j = 0; j < 6; ++j)
        CHECK(check_derivation_invariance(k4, der.element(d), so4.unit_vector(i), so4.unit_vector(j)) == 0);
}

TEST_CASE("property: both forms are symmetric and invariant on every built family member") {
  for (const auto& spec : {AlgebraSpec::sl(2), AlgebraSpec::sl(3), AlgebraSpec::o(2), AlgebraSpec::o(3),
                           AlgebraSpec::sp(1), AlgebraSpec::sp(2)}) {
    CAPTURE(label(spec));
    const LieAlgebra g = LieAlgebra::build(spec);
    for (const BilinearForm& form : {killing_form(g), trace_form(g)}) {
      CHECK(form.gram() == Mat(form.gram().transpose()));
      bool ok = true;
      for (Index i = 0; i < g.dim(); ++i)
        for (Index j = 0; j < g.dim(); ++j)
          for (Index l = 0; l < g.dim(); ++l)
            ok = ok && check_invariance(form, g.unit_vector(i), g.unit_vector(j), g.unit_vector(l)) == 0;
      CHECK(ok);
    }
    CHECK(is_nondegenerate(killing_form(g)));
  }
}

TEST_CASE("property: invariance and inner derivation invariance agree") {
  const LieAlgebra g = build_sl(IndexSet{1, 2, 3});
  const BilinearForm k = killing_form(g);
  Rng rng(42);
  for (int n = 0; n < 100; ++n) {
    const Vec a = random_vector(8, rng), x = random_vector(8, rng), y = random_vector(8, rng);
    // k([a,x],y) + k(x,[a,y]) is both expressions at once.
    CHECK(check_derivation_invariance(k, inner_derivation(g, a), x, y) == check_invariance(k, a, x, y));
    CHECK(check_invariance(k, a, x, y) == 0);
  }
}

TEST_CASE("forms reject non-symmetric Gram matrices") {
  const LieAlgebra sl2 = build_sl(IndexSet{1, 2});
  Mat g = zero_matrix<Rational>(3, 3);
  g(0, 1) = 1;
  CHECK_THROWS(BilinearForm(sl2, g));
}
