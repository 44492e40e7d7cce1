#include "doctest.h"

#include "lielab/error.hpp"
#include "lielab/matrix_units.hpp"
#include "lielab/sampling.hpp"
#include "oracles.hpp"

using namespace lielab;

TEST_CASE("signed labels order positives before negatives") {
  const IndexSet s{-2, 3, 1, -1};
  CHECK(s.labels() == std::vector<int>{1, 3, -1, -2});
  CHECK(IndexSet{1, 2}.doubled().labels() == std::vector<int>{1, 2, -1, -2});
  CHECK_THROWS_AS(Idx(0), UsageError);
  CHECK(IndexSet{1, 2}.is_subset_of(IndexSet{1, 2, 3}));
  CHECK_FALSE(IndexSet{1, 4}.is_subset_of(IndexSet{1, 2, 3}));
}

TEST_CASE("matrix unit examples") {
  const FinMatrix e12 = unit(1, 2);
  CHECK(e12.nnz() == 1);
  CHECK(e12.at(Idx(1), Idx(2)) == 1);
  CHECK(mul(unit(1, 1), unit(1, 1)) == unit(1, 1));
  CHECK(mul(unit(1, 2), unit(3, 4)).is_zero());
}

TEST_CASE("multiplication examples") {
  CHECK(mul(unit(1, 2), unit(2, 3)) == unit(1, 3));
  CHECK(mul(unit(1, 2), FinMatrix{}).is_zero());
  const FinMatrix s = unit(1, 2) + unit(2, 1);
  CHECK(mul(s, s) == unit(1, 1) + unit(2, 2));
}

TEST_CASE("bracket examples") {
  CHECK(bracket(unit(1, 2), unit(1, 2)).is_zero());
  CHECK(bracket(unit(1, 2), unit(2, 1)) == unit(1, 1) - unit(2, 2));
  const FinMatrix h = unit(1, 1) - unit(2, 2);
  CHECK(bracket(h, unit(1, 2)) == Rational(2) * unit(1, 2));
  // Dense 2x2 oracle for the same product.
  const oracle::Dense H = {{1, 0}, {0, -1}}, E = {{0, 1}, {0, 0}};
  const auto HE = oracle::mul(H, E), EH = oracle::mul(E, H);
  CHECK(oracle::from_fin(bracket(h, unit(1, 2)), {1, 2}) == oracle::Dense{{HE[0][0] - EH[0][0], HE[0][1] - EH[0][1]},
                                                                          {HE[1][0] - EH[1][0], HE[1][1] - EH[1][1]}});
}

TEST_CASE("transpose and trace examples") {
  CHECK(transpose(unit(1, 2)) == unit(2, 1));
  const FinMatrix q1 = q_form(IndexSet{1, 2}, FormKind::symmetric);
  CHECK(transpose(q1) == q1);
  CHECK(transpose(transpose(unit(3, -1) + Rational(5) * unit(-2, 2))) == unit(3, -1) + Rational(5) * unit(-2, 2));
  CHECK(trace(unit(1, 1)) == 1);
  CHECK(trace(unit(1, 2)) == 0);
}

TEST_CASE("q forms") {
  CHECK(q_form(IndexSet{1}, FormKind::symmetric) == unit(1, -1) + unit(-1, 1));
  CHECK(q_form(IndexSet{1}, FormKind::alternating) == unit(1, -1) - unit(-1, 1));
  const IndexSet J{1, 2, 3};
  const FinMatrix q1 = q_form(J, FormKind::symmetric);
  CHECK(mul(q1, q1) == identity(J.doubled()));
  const FinMatrix q2 = q_form(J, FormKind::alternating);
  CHECK(transpose(q2) == -q2);
  CHECK_THROWS_AS(q_form(IndexSet{1, -2}, FormKind::symmetric), UsageError);
}

TEST_CASE("projection examples") {
  const IndexSet I{1, 2};
  CHECK(project(unit(1, 2), I) == unit(1, 2));
  CHECK(project(unit(1, 3), I).is_zero());
  CHECK(project(unit(1, 1) + unit(3, 3), I) == unit(1, 1));
}

TEST_CASE("no explicit zeros survive arithmetic") {
  FinMatrix x = unit(1, 2) + unit(2, 1);
  x -= unit(1, 2);
  CHECK(x == unit(2, 1));
  CHECK(x.nnz() == 1);
  x *= Rational(0);
  CHECK(x.is_zero());
  FinMatrix y;
  y.set(Idx(1), Idx(1), Rational(0));
  CHECK(y.nnz() == 0);
}

namespace {

std::vector<int> labels_of(const IndexSet& s) { return s.labels(); }

}  // namespace

TEST_CASE("property: products agree with dense multiplication") {
  Rng rng(21);
  const IndexSet J = IndexSet{1, 2, 3}.doubled();
  for (int trial = 0; trial < 200; ++trial) {
    const FinMatrix x = random_fin_matrix(J, J, rng), y = random_fin_matrix(J, J, rng);
    CHECK(oracle::from_fin(mul(x, y), labels_of(J)) ==
          oracle::mul(oracle::from_fin(x, labels_of(J)), oracle::from_fin(y, labels_of(J))));
  }
}

TEST_CASE("property: Jacobi, alternation and trace symmetry on random matrices") {
  Rng rng(22);
  const IndexSet J{1, 2, 3, -1};
  for (int trial = 0; trial < 200; ++trial) {
    const FinMatrix x = random_fin_matrix(J, J, rng), y = random_fin_matrix(J, J, rng),
                    z = random_fin_matrix(J, J, rng);
    CHECK((bracket(bracket(x, y), z) + bracket(bracket(y, z), x) + bracket(bracket(z, x), y)).is_zero());
    CHECK(bracket(x, x).is_zero());
    CHECK(trace(mul(x, y)) == trace(mul(y, x)));
    CHECK(trace(bracket(x, y)) == 0);
    const FinMatrix xy = mul(x, y);
    for (const auto& [key, v] : xy.entries()) CHECK_FALSE(v.is_zero());
  }
}

TEST_CASE("property: projection to a block is a bracket homomorphism against block elements") {
  Rng rng(23);
  const IndexSet J{1, 2, 3, 4}, I{1, 3};
  for (int trial = 0; trial < 1000; ++trial) {
    const FinMatrix x = random_fin_matrix(J, J, rng);
    const FinMatrix y = random_fin_matrix(I, I, rng);
    REQUIRE(project(y, I) == y);
    CHECK(project(bracket(x, y), I) == bracket(project(x, I), project(y, I)));
  }
}
