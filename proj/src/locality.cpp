#include "lielab/locality.hpp"

#include "lielab/error.hpp"
#include "lielab/sampling.hpp"

namespace lielab {

std::string to_string(Verdict v) { return v == Verdict::proven_equal ? "ProvenEqual" : "Inconclusive"; }

Mat evaluation_matrix(const DerivationSpace& der, const Vec& x) {
  const Index n = der.algebra().dim();
  if (x.size() != n) throw UsageError("evaluation_matrix: point length mismatch");
  Mat m = zero_matrix<Rational>(n, der.dim());
  const Mat& basis = der.basis().rows();
  for (Index k = 0; k < der.dim(); ++k) {
    for (Index r = 0; r < n; ++r) {
      for (Index c = 0; c < n; ++c) {
        if (x[c].is_zero()) continue;
        const auto& e = basis(k, r * n + c);
        if (!e.is_zero()) m(r, k) += e * x[c];
      }
    }
  }
  return m;
}

WitnessOutcome witness_at(const DerivationSpace& der, const LinMap& delta, const Vec& x) {
  const Mat m = evaluation_matrix(der, x);
  const Vec target = delta(x);
  auto outcome = solve_or_certify(m, target);
  if (const auto* c = std::get_if<Vec>(&outcome); c && Vec(m * *c) != target) {
    throw Error("witness_at: solution failed re-verification");
  }
  return outcome;
}

namespace {

// Rows w (x) x over flattened maps, one per annihilator vector w of W_x.
std::pair<Subspace, std::vector<SparseRow<Rational>>> point_constraints(const DerivationSpace& der, const Vec& x) {
  const Index n = der.algebra().dim();
  const Mat m = evaluation_matrix(der, x);
  const Subspace image = Subspace::span(Mat(m.transpose()));
  const Subspace ann = annihilator(image);
  std::vector<SparseRow<Rational>> rows;
  for (Index k = 0; k < ann.dim(); ++k) {
    SparseRow<Rational> row;
    for (Index r = 0; r < n; ++r) {
      const auto& w = ann.rows()(k, r);
      if (w.is_zero()) continue;
      for (Index c = 0; c < n; ++c) {
        if (!x[c].is_zero()) row.emplace_back(r * n + c, w * x[c]);
      }
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return {image, std::move(rows)};
}

}  // namespace

Subspace PointCondition::space() const { return kernel(constraints); }

bool PointCondition::admits(const LinMap& delta) const {
  return is_zero_vector(Vec(constraints * delta.flatten()));
}

PointCondition point_condition(const DerivationSpace& der, const Vec& x) {
  const Index n = der.algebra().dim();
  auto [image, rows] = point_constraints(der, x);
  Mat constraints = zero_matrix<Rational>(static_cast<Index>(rows.size()), n * n);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    for (const auto& [c, v] : rows[k]) constraints(static_cast<Index>(k), c) = v;
  }
  return {x, std::move(image), std::move(constraints)};
}

LocalDerBound local_der_bound(const DerivationSpace& der, std::uint64_t seed, int max_rounds) {
  if (max_rounds < 1) throw UsageError("local_der_bound: max_rounds must be at least 1");
  const LieAlgebra& g = der.algebra();
  const Index n = g.dim();
  EchelonBuilder<Rational> constraints(n * n);
  LocalDerBound bound;
  bound.seed = seed;
  Rng rng(seed);

  auto visit = [&](const Vec& x) {
    for (const auto& row : point_constraints(der, x).second) constraints.insert(row);
    bound.points.push_back(x);
    bound.point_dims.push_back(n * n - constraints.rank());
  };

  Index previous = n * n;
  int unchanged = 0;
  for (int round = 1; round <= max_rounds; ++round) {
    if (round == 1) {
      for (Index i = 0; i < n; ++i) visit(g.unit_vector(i));
    } else if (round == 2) {
      for (Index i = 0; i < n; ++i) {
        for (Index j = i + 1; j < n; ++j) visit(Vec(g.unit_vector(i) + g.unit_vector(j)));
      }
    } else {
      for (Index k = 0; k < n; ++k) visit(random_sparse_vector(n, rng));
    }
    const Index current = n * n - constraints.rank();
    unchanged = current == previous ? unchanged + 1 : 0;
    previous = current;
    bound.round_dims.push_back(current);
    bound.rounds = round;
    if (unchanged >= 3) break;
  }
  bound.space = Subspace::null_space_of(constraints);
  return bound;
}

Certificate certify_locder_equals_der(const DerivationSpace& der, const LocalDerBound& bound) {
  if (bound.space.ambient() != der.basis().ambient()) throw UsageError("certify: bound belongs to another algebra");
  if (!subspace_contains(bound.space, der.basis())) throw Error("certify: bound does not contain Der");
  Certificate cert;
  if (subspace_contains(der.basis(), bound.space)) {
    cert.verdict = Verdict::proven_equal;
    for (Index k = 0; k < bound.space.dim(); ++k) {
      cert.expansions.push_back(*der.basis().coordinates(bound.space.vector(k)));
    }
    cert.excess = Subspace::zero(bound.space.ambient());
    return cert;
  }
  EchelonBuilder<Rational> modulo(der.basis().ambient());
  for (Index k = 0; k < der.dim(); ++k) modulo.insert_dense(der.basis().rows().row(k));
  EchelonBuilder<Rational> excess(der.basis().ambient());
  for (Index k = 0; k < bound.space.dim(); ++k) {
    const auto rest = modulo.reduce(to_sparse(bound.space.rows().row(k)));
    if (!rest.empty()) excess.insert(rest);
  }
  cert.verdict = Verdict::inconclusive;
  cert.excess = Subspace::from_builder(excess);
  return cert;
}

LinMap restrict_local(const LieAlgebra& big, const LieAlgebra& small, const LinMap& delta) {
  if (delta.dim() != big.dim()) throw UsageError("restrict_local: map does not act on the larger algebra");
  Mat m(small.dim(), small.dim());
  for (Index k = 0; k < small.dim(); ++k) {
    const Vec image = delta(embed(small, big, small.unit_vector(k)));
    m.col(k) = restrict_to(big, small, image);
  }
  return LinMap(std::move(m));
}

IndexSet covering_index_set(const std::vector<FinMatrix>& elements) {
  std::vector<Idx> labels;
  for (const auto& x : elements) {
    for (const auto& i : x.support()) labels.emplace_back(i.id());
  }
  return IndexSet(std::move(labels));
}

}  // namespace lielab
