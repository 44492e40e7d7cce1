#include "doctest.h"

#include "lielab/exact_linalg.hpp"
#include "lielab/rational.hpp"
#include "lielab/sampling.hpp"
#include "oracles.hpp"

using namespace lielab;

namespace {

Mat mat(std::initializer_list<std::initializer_list<long>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r ? static_cast<Index>(rows.begin()->size()) : 0;
  Mat m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (long v : row) m(i, j++) = Rational(v);
    ++i;
  }
  return m;
}

Vec vec(std::initializer_list<long> xs) {
  Vec v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (long x : xs) v[i++] = Rational(x);
  return v;
}

Mat random_matrix(Index r, Index c, Rng& rng) {
  Mat m(r, c);
  for (Index i = 0; i < r; ++i) m.row(i) = random_sparse_vector(c, rng).transpose();
  // Occasionally force a dependent row.
  if (r > 2 && rng() % 2) m.row(r - 1) = m.row(0) - Rational(2) * m.row(1);
  return m;
}

}  // namespace

TEST_CASE("rref examples") {
  auto z = rref(mat({{0, 0}, {0, 0}}));
  CHECK(z.reduced == mat({{0, 0}, {0, 0}}));
  CHECK(z.pivots.empty());

  auto d = rref(mat({{2, 0}, {0, 3}}));
  CHECK(d.reduced == mat({{1, 0}, {0, 1}}));
  CHECK(d.pivots == std::vector<Index>{0, 1});

  auto p = rref(mat({{1, 2}, {2, 4}}));
  CHECK(p.reduced == mat({{1, 2}, {0, 0}}));
  CHECK(p.pivots == std::vector<Index>{0});
}

TEST_CASE("kernel examples") {
  CHECK(kernel(Mat(Mat::Identity(3, 3))).dim() == 0);
  CHECK(kernel(zero_matrix<Rational>(2, 3)).dim() == 3);
  const Subspace k = kernel(mat({{1, 1, 0}}));
  CHECK(k.dim() == 2);
  for (Index i = 0; i < k.dim(); ++i) CHECK(is_zero_vector(Vec(mat({{1, 1, 0}}) * k.vector(i))));
}

TEST_CASE("solve examples") {
  CHECK(*solve(Mat(Mat::Identity(3, 3)), vec({4, -1, 7})) == vec({4, -1, 7}));
  CHECK_FALSE(solve(mat({{1, 0}, {0, 0}}), vec({0, 1})).has_value());
  CHECK(*solve(mat({{1, 1}}), vec({2})) == vec({2, 0}));
}

TEST_CASE("infeasible systems carry a separating certificate") {
  const Mat m = mat({{1, 0}, {0, 0}, {1, 0}});
  const Vec b = vec({1, 1, 2});
  auto outcome = solve_or_certify(m, b);
  REQUIRE(std::holds_alternative<Infeasible<Rational>>(outcome));
  const Vec y = std::get<Infeasible<Rational>>(outcome).certificate;
  CHECK(is_zero_vector(Vec(m.transpose() * y)));
  CHECK(y.dot(b) == 1);
}

TEST_CASE("subspace containment examples") {
  const Subspace x_axis = Subspace::span(mat({{1, 0}}));
  CHECK(subspace_contains(Subspace::full(2), x_axis));
  CHECK_FALSE(subspace_contains(Subspace::zero(2), x_axis));
  CHECK(subspace_contains(x_axis, x_axis));
}

TEST_CASE("subspace intersection examples") {
  const Subspace v = Subspace::span(mat({{1, 2, 0}, {0, 1, 1}}));
  CHECK(subspace_intersect(v, v) == v);
  CHECK(subspace_intersect(Subspace::span(mat({{1, 0}})), Subspace::span(mat({{0, 1}}))).dim() == 0);
  const Subspace diag = Subspace::span(mat({{1, 1}}));
  CHECK(subspace_intersect(Subspace::span(mat({{1, 0}, {0, 1}})), diag) == diag);
}

TEST_CASE("canonical bases make equal spans compare equal") {
  const Subspace a = Subspace::span(mat({{1, 1, 0}, {0, 1, 1}}));
  const Subspace b = Subspace::span(mat({{1, 2, 1}, {2, 2, 0}, {3, 4, 1}}));
  CHECK(a == b);
  const auto c = a.coordinates(vec({1, 2, 1}));
  REQUIRE(c.has_value());
  CHECK(Vec(a.rows().transpose() * *c) == vec({1, 2, 1}));
  CHECK_FALSE(a.contains(vec({1, 0, 0})));
}

TEST_CASE("sum and annihilator") {
  const Subspace a = Subspace::span(mat({{1, 0, 0}}));
  const Subspace b = Subspace::span(mat({{0, 1, 0}}));
  CHECK(subspace_sum(a, b).dim() == 2);
  const Subspace ann = annihilator(subspace_sum(a, b));
  CHECK(ann == Subspace::span(mat({{0, 0, 1}})));
}

TEST_CASE("property: rref is idempotent and rank agrees with an independent elimination") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Index r = 1 + static_cast<Index>(rng() % 5), c = 1 + static_cast<Index>(rng() % 6);
    const Mat m = random_matrix(r, c, rng);
    const auto once = rref(m);
    const auto twice = rref(once.reduced);
    CHECK(twice.reduced == once.reduced);
    CHECK(twice.pivots == once.pivots);
    CHECK(rank(m) == oracle::rank(oracle::from_eigen(m)));
  }
}

TEST_CASE("property: rank plus nullity equals the column count") {
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const Index r = 1 + static_cast<Index>(rng() % 6), c = 1 + static_cast<Index>(rng() % 7);
    const Mat m = random_matrix(r, c, rng);
    const Subspace k = kernel(m);
    CHECK(rank(m) + k.dim() == c);
    for (Index i = 0; i < k.dim(); ++i) CHECK(is_zero_vector(Vec(m * k.vector(i))));
  }
}

TEST_CASE("property: solve is sound in both directions") {
  Rng rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const Index r = 1 + static_cast<Index>(rng() % 5), c = 1 + static_cast<Index>(rng() % 5);
    const Mat m = random_matrix(r, c, rng);
    const Vec b = random_sparse_vector(r, rng);
    auto outcome = solve_or_certify(m, b);
    if (const Vec* v = std::get_if<Vec>(&outcome)) {
      CHECK(Vec(m * *v) == b);
    } else {
      Mat aug(r, c + 1);
      aug << m, b;
      CHECK(oracle::rank(oracle::from_eigen(aug)) > oracle::rank(oracle::from_eigen(m)));
      const Vec y = std::get<Infeasible<Rational>>(outcome).certificate;
      CHECK(is_zero_vector(Vec(m.transpose() * y)));
      CHECK(y.dot(b) == 1);
    }
  }
}

TEST_CASE("property: intersection is order-insensitive and contained in both") {
  Rng rng(14);
  for (int trial = 0; trial < 150; ++trial) {
    const Index n = 2 + static_cast<Index>(rng() % 5);
    const Subspace a = Subspace::span(random_matrix(1 + static_cast<Index>(rng() % n), n, rng));
    const Subspace b = Subspace::span(random_matrix(1 + static_cast<Index>(rng() % n), n, rng));
    const Subspace ab = subspace_intersect(a, b);
    CHECK(ab == subspace_intersect(b, a));
    CHECK(subspace_contains(a, ab));
    CHECK(subspace_contains(b, ab));
    // dim(a + b) + dim(a n b) = dim a + dim b
    CHECK(subspace_sum(a, b).dim() + ab.dim() == a.dim() + b.dim());
  }
}

TEST_CASE("echelon builder keeps rows reduced") {
  EchelonBuilder<Rational> b(3);
  CHECK(b.insert_dense(vec({0, 2, 4})));
  CHECK(b.insert_dense(vec({1, 1, 1})));
  CHECK_FALSE(b.insert_dense(vec({1, 3, 5})));
  CHECK(b.rank() == 2);
  CHECK(b.pivots() == std::vector<Index>{0, 1});
  const auto null = b.null_space_rows();
  REQUIRE(null.size() == 1);
  const Vec n = to_dense(null[0], 3);
  CHECK(vec({0, 2, 4}).dot(n) == 0);
  CHECK(vec({1, 1, 1}).dot(n) == 0);
}
