#include "lielab/lie_algebra.hpp"

#include "lielab/error.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <deque>

namespace lielab {

std::string to_string(Family f) {
  switch (f) {
    case Family::sl: return "sl";
    case Family::o: return "o";
    case Family::sp: return "sp";
    case Family::custom: return "custom";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  if (name == "sl") return Family::sl;
  if (name == "o") return Family::o;
  if (name == "sp") return Family::sp;
  if (name == "custom") return Family::custom;
  throw ParseError("unknown algebra family '" + name + "' (expected sl, o, sp or custom)");
}

AlgebraSpec AlgebraSpec::family_member(Family f, int n) {
  if (f == Family::custom) throw UsageError("family_member: custom algebras need explicit constants");
  return {f, IndexSet::first(n), {}};
}

std::string label(const AlgebraSpec& spec) {
  if (spec.family == Family::custom) return "custom(dim " + std::to_string(spec.constants.dim()) + ")";
  const auto labels = spec.indices.labels();
  const bool contiguous = [&] {
    for (std::size_t k = 0; k < labels.size(); ++k) {
      if (labels[k] != static_cast<int>(k) + 1) return false;
    }
    return true;
  }();
  if (contiguous) return to_string(spec.family) + std::to_string(labels.size());
  std::string s = to_string(spec.family) + "{";
  for (std::size_t k = 0; k < labels.size(); ++k) s += (k ? "," : "") + std::to_string(labels[k]);
  return s + "}";
}

StructureConstants::StructureConstants(Index dim)
    : dim_(dim), dense_(static_cast<std::size_t>(dim * dim * dim), Rational(0)),
      sparse_(static_cast<std::size_t>(dim * dim)) {}

void StructureConstants::set(Index i, Index j, Index k, const Rational& v) {
  if (i < 0 || j < 0 || k < 0 || i >= dim_ || j >= dim_ || k >= dim_) {
    throw UsageError("structure constant index out of range");
  }
  dense_[flat(i, j, k)] = v;
  auto& row = sparse_[i * dim_ + j];
  auto it = std::lower_bound(row.begin(), row.end(), k, [](const auto& e, Index c) { return e.first < c; });
  if (it != row.end() && it->first == k) {
    if (v.is_zero()) {
      row.erase(it);
    } else {
      it->second = v;
    }
  } else if (!v.is_zero()) {
    row.insert(it, {k, v});
  }
}

Vec StructureConstants::bracket_vector(Index i, Index j) const { return to_dense(bracket_of_basis(i, j), dim_); }

namespace {

Index ambient_position(const IndexSet& ambient, const Idx& i, const Idx& j) {
  const auto pi = ambient.position(i);
  const auto pj = ambient.position(j);
  if (!pi || !pj) return -1;
  return static_cast<Index>(*pi * ambient.size() + *pj);
}

SparseRow<Rational> ambient_vector(const IndexSet& ambient, const FinMatrix& x) {
  SparseRow<Rational> row;
  for (const auto& [key, v] : x.entries()) {
    const Index p = ambient_position(ambient, key.first, key.second);
    if (p < 0) throw NotInAlgebra("matrix has support outside the ambient index set");
    row.emplace_back(p, v);
  }
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return row;
}

FinMatrix::Key ambient_key(const IndexSet& ambient, Index p) {
  const auto a = static_cast<Index>(ambient.size());
  return {ambient[static_cast<std::size_t>(p / a)], ambient[static_cast<std::size_t>(p % a)]};
}

// Basis of { x in gl(ambient) : x^T q + q x = 0 }.
std::vector<FinMatrix> quadratic_form_algebra_basis(const IndexSet& ambient, const FinMatrix& q) {
  const Index a = static_cast<Index>(ambient.size());
  const Index n = a * a;
  Mat constraint = zero_matrix<Rational>(n, n);
  for (Index p = 0; p < n; ++p) {
    const auto [i, j] = ambient_key(ambient, p);
    const FinMatrix e = unit(i, j);
    const FinMatrix image = mul(transpose(e), q) + mul(q, e);
    for (const auto& [row, v] : ambient_vector(ambient, image)) constraint(row, p) = v;
  }
  const Subspace solutions = kernel(constraint);
  std::vector<FinMatrix> basis;
  for (Index k = 0; k < solutions.dim(); ++k) {
    FinMatrix x;
    for (Index p = 0; p < n; ++p) {
      if (!solutions.rows()(k, p).is_zero()) {
        const auto [i, j] = ambient_key(ambient, p);
        x.set(i, j, solutions.rows()(k, p));
      }
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

Rational rationalize(double x) {
  // Continued-fraction convergents; exactness is re-checked by the caller.
  constexpr long long max_den = 100000;
  long long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double r = x;
  for (int iter = 0; iter < 64; ++iter) {
    const double a = std::floor(r);
    if (std::abs(a) > 1e12) break;
    const auto ai = static_cast<long long>(a);
    const long long h2 = ai * h1 + h0;
    const long long k2 = ai * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    if (std::abs(static_cast<double>(h1) / static_cast<double>(k1) - x) < 1e-9) break;
    const double frac = r - a;
    if (frac < 1e-12) break;
    r = 1.0 / frac;
  }
  return Rational(h1, k1);
}

}  // namespace

LieAlgebra LieAlgebra::from_matrix_basis(AlgebraSpec spec, IndexSet ambient, std::vector<FinMatrix> basis) {
  auto d = std::make_shared<Data>();
  d->spec = std::move(spec);
  d->ambient = std::move(ambient);
  d->basis = std::move(basis);
  d->dim = static_cast<Index>(d->basis.size());
  const Index n = d->dim;
  const Index amb = static_cast<Index>(d->ambient.size() * d->ambient.size());

  // Row k of [B^T | I]; its echelon form pairs each pivot position with a row
  // of the transform T, and coords(x) = T^T x(pivots).
  EchelonBuilder<Rational> builder(amb + n);
  for (Index k = 0; k < n; ++k) {
    auto row = ambient_vector(d->ambient, d->basis[k]);
    row.emplace_back(amb + k, Rational(1));
    builder.insert(row);
  }
  const auto pivots = builder.pivots();
  if (static_cast<Index>(pivots.size()) != n || (n > 0 && pivots.back() >= amb)) {
    throw StructureError("matrix basis is linearly dependent");
  }
  d->functionals.resize(static_cast<std::size_t>(n));
  for (Index p : pivots) {
    const auto key = ambient_key(d->ambient, p);
    for (const auto& [c, v] : builder.pivot_row(p)) {
      if (c >= amb) d->functionals[static_cast<std::size_t>(c - amb)].terms.emplace_back(key, v);
    }
  }

  d->constants = StructureConstants(n);
  LieAlgebra g(d);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      const Vec c = g.coords(lielab::bracket(d->basis[i], d->basis[j]));
      for (Index k = 0; k < n; ++k) {
        if (c[k].is_zero()) continue;
        d->constants.set(i, j, k, c[k]);
        d->constants.set(j, i, k, -c[k]);
      }
    }
  }
  return g;
}

LieAlgebra LieAlgebra::build(const AlgebraSpec& spec) {
  switch (spec.family) {
    case Family::sl: return build_sl(spec.indices);
    case Family::o: return build_o(spec.indices);
    case Family::sp: return build_sp(spec.indices);
    case Family::custom: return build_custom(spec.constants);
  }
  throw UsageError("unknown family");
}

LieAlgebra build_sl(const IndexSet& set) {
  if (set.size() < 2) throw Unsupported("sl needs at least two indices (smaller cases are abelian or zero)");
  if (!set.all_positive()) throw UsageError("sl index set must contain positive labels only");
  std::vector<FinMatrix> basis;
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) basis.push_back(unit(set[i], set[j]));
  }
  for (std::size_t k = 0; k + 1 < set.size(); ++k) {
    basis.push_back(unit(set[k], set[k]) - unit(set[k + 1], set[k + 1]));
  }
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) basis.push_back(unit(set[i], set[j]));
  }
  return LieAlgebra::from_matrix_basis({Family::sl, set, {}}, set, std::move(basis));
}

LieAlgebra build_o(const IndexSet& set) {
  if (set.empty()) throw UsageError("o needs a nonempty index set");
  const IndexSet ambient = set.doubled();
  auto basis = quadratic_form_algebra_basis(ambient, q_form(set, FormKind::symmetric));
  return LieAlgebra::from_matrix_basis({Family::o, set, {}}, ambient, std::move(basis));
}

LieAlgebra build_sp(const IndexSet& set) {
  if (set.empty()) throw UsageError("sp needs a nonempty index set");
  const IndexSet ambient = set.doubled();
  auto basis = quadratic_form_algebra_basis(ambient, q_form(set, FormKind::alternating));
  return LieAlgebra::from_matrix_basis({Family::sp, set, {}}, ambient, std::move(basis));
}

Vec jacobi_residual(const StructureConstants& c, Index i, Index j, Index k) {
  Vec r = zero_vector<Rational>(c.dim());
  auto add_term = [&](Index a, Index b, Index d) {
    for (const auto& [m, v] : c.bracket_of_basis(a, b)) {
      for (const auto& [t, w] : c.bracket_of_basis(m, d)) r[t] += v * w;
    }
  };
  add_term(i, j, k);
  add_term(j, k, i);
  add_term(k, i, j);
  return r;
}

void validate_axioms(const StructureConstants& c) {
  const Index n = c.dim();
  for (Index i = 0; i < n; ++i) {
    for (Index j = i; j < n; ++j) {
      for (Index k = 0; k < n; ++k) {
        const Rational sum = c(i, j, k) + c(j, i, k);
        if (!sum.is_zero()) {
          throw AxiomViolation("antisymmetry fails: c(" + std::to_string(i) + "," + std::to_string(j) + "," +
                                   std::to_string(k) + ") + c(" + std::to_string(j) + "," + std::to_string(i) +
                                   "," + std::to_string(k) + ") = " + to_string(sum),
                               static_cast<int>(i), static_cast<int>(j), static_cast<int>(k));
        }
      }
    }
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      for (Index k = j + 1; k < n; ++k) {
        const Vec r = jacobi_residual(c, i, j, k);
        if (!is_zero_vector(r)) {
          std::string residual;
          for (Index m = 0; m < n; ++m) residual += (m ? "," : "") + to_string(r[m]);
          throw AxiomViolation("Jacobi identity fails on basis triple (" + std::to_string(i) + "," +
                                   std::to_string(j) + "," + std::to_string(k) + "), residual [" + residual + "]",
                               static_cast<int>(i), static_cast<int>(j), static_cast<int>(k));
        }
      }
    }
  }
}

LieAlgebra build_custom(StructureConstants constants) {
  if (constants.dim() < 1) throw UsageError("custom algebra needs dimension at least 1");
  validate_axioms(constants);
  auto d = std::make_shared<LieAlgebra::Data>();
  d->dim = constants.dim();
  d->constants = constants;
  d->spec = AlgebraSpec::custom(std::move(constants));
  return LieAlgebra(d);
}

Vec LieAlgebra::coords(const FinMatrix& x) const {
  if (!is_matrix_family()) throw Unsupported("custom algebras have no matrix realization");
  if (!x.support().is_subset_of(d_->ambient)) throw NotInAlgebra("matrix has support outside the ambient index set");
  Vec v = zero_vector<Rational>(dim());
  for (Index k = 0; k < dim(); ++k) {
    for (const auto& [key, w] : d_->functionals[static_cast<std::size_t>(k)].terms) {
      v[k] += w * x.at(key.first, key.second);
    }
  }
  if (from_coords(v) != x) throw NotInAlgebra("matrix " + to_string(x) + " is not in " + label(spec()));
  return v;
}

FinMatrix LieAlgebra::from_coords(const Vec& v) const {
  if (!is_matrix_family()) throw Unsupported("custom algebras have no matrix realization");
  if (v.size() != dim()) throw UsageError("from_coords: coordinate length mismatch");
  FinMatrix x;
  for (Index k = 0; k < dim(); ++k) {
    if (!v[k].is_zero()) x += v[k] * d_->basis[static_cast<std::size_t>(k)];
  }
  return x;
}

Vec LieAlgebra::unit_vector(Index k) const {
  Vec v = zero_vector<Rational>(dim());
  v[k] = 1;
  return v;
}

Vec LieAlgebra::bracket(const Vec& u, const Vec& v) const {
  if (u.size() != dim() || v.size() != dim()) throw UsageError("bracket: coordinate length mismatch");
  Vec r = zero_vector<Rational>(dim());
  for (Index i = 0; i < dim(); ++i) {
    if (u[i].is_zero()) continue;
    for (Index j = 0; j < dim(); ++j) {
      if (v[j].is_zero() || i == j) continue;
      const Rational uv = u[i] * v[j];
      for (const auto& [k, c] : d_->constants.bracket_of_basis(i, j)) r[k] += uv * c;
    }
  }
  return r;
}

Mat LieAlgebra::ad(const Vec& a) const {
  if (a.size() != dim()) throw UsageError("ad: coordinate length mismatch");
  Mat m = zero_matrix<Rational>(dim(), dim());
  for (Index i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (Index j = 0; j < dim(); ++j) {
      for (const auto& [k, c] : d_->constants.bracket_of_basis(i, j)) m(k, j) += a[i] * c;
    }
  }
  return m;
}

Mat LieAlgebra::ad_basis(Index i) const { return ad(unit_vector(i)); }

namespace {

void check_tower_pair(const LieAlgebra& small, const LieAlgebra& big) {
  if (!small.is_matrix_family() || !big.is_matrix_family()) {
    throw Unsupported("embedding needs matrix-family algebras");
  }
  if (small.family() != big.family()) throw UsageError("embedding between different families");
  if (!small.spec().indices.is_subset_of(big.spec().indices)) {
    throw UsageError("index set of " + label(small.spec()) + " is not contained in that of " + label(big.spec()));
  }
}

}  // namespace

Vec embed(const LieAlgebra& small, const LieAlgebra& big, const Vec& v) {
  check_tower_pair(small, big);
  return big.coords(small.from_coords(v));
}

Vec restrict_to(const LieAlgebra& big, const LieAlgebra& small, const Vec& v) {
  check_tower_pair(small, big);
  FinMatrix x = project(big.from_coords(v), small.ambient_indices());
  if (small.family() == Family::sl) {
    const Rational shift = trace(x) / Rational(static_cast<long>(small.ambient_indices().size()));
    x -= shift * identity(small.ambient_indices());
  }
  try {
    return small.coords(x);
  } catch (const NotInAlgebra& e) {
    throw StructureError(std::string("projection leaves the subalgebra: ") + e.what());
  }
}

Subspace generated_ideal(const LieAlgebra& g, const Vec& v) {
  EchelonBuilder<Rational> builder(g.dim());
  std::deque<Vec> queue;
  if (builder.insert_dense(v)) queue.push_back(v);
  while (!queue.empty()) {
    const Vec w = queue.front();
    queue.pop_front();
    for (Index i = 0; i < g.dim(); ++i) {
      Vec b = g.bracket(g.unit_vector(i), w);
      if (builder.insert_dense(b)) queue.push_back(std::move(b));
    }
  }
  return Subspace::from_builder(builder);
}

Tower Tower::build(Family family, const std::vector<IndexSet>& chain) {
  if (family == Family::custom) throw Unsupported("towers need a matrix family");
  Tower t;
  t.family_ = family;
  for (std::size_t k = 0; k < chain.size(); ++k) {
    if (k > 0 && (!chain[k - 1].is_subset_of(chain[k]) || chain[k - 1] == chain[k])) {
      throw UsageError("tower index sets must increase strictly");
    }
    t.levels_.push_back(LieAlgebra::build({family, chain[k], {}}));
  }
  return t;
}

Tower Tower::consecutive(Family family, int from, int to) {
  std::vector<IndexSet> chain;
  for (int n = from; n <= to; ++n) chain.push_back(IndexSet::first(n));
  return build(family, chain);
}

Vec Tower::embed(std::size_t from, std::size_t to, const Vec& v) const {
  if (from > to) throw UsageError("tower embed goes upward only");
  return lielab::embed(levels_.at(from), levels_.at(to), v);
}

Vec Tower::restrict_to(std::size_t from, std::size_t to, const Vec& v) const {
  if (to > from) throw UsageError("tower restriction goes downward only");
  return lielab::restrict_to(levels_.at(from), levels_.at(to), v);
}

Subspace standard_cartan(const LieAlgebra& g) {
  if (!g.is_matrix_family()) throw Unsupported("standard Cartan needs a matrix family");
  std::vector<Vec> diagonal;
  for (Index k = 0; k < g.dim(); ++k) {
    const auto& entries = g.basis()[static_cast<std::size_t>(k)].entries();
    const bool is_diagonal =
        std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.first.first == e.first.second; });
    if (is_diagonal) diagonal.push_back(g.unit_vector(k));
  }
  return Subspace::span(diagonal, g.dim());
}

namespace {

// Eigenspaces of `op` restricted to the invariant subspace `space`, as
// subspaces of the ambient coordinate space.
std::vector<std::pair<Rational, Subspace>> split_eigenspaces(const Mat& op, const Subspace& space) {
  const Index m = space.dim();
  Mat restricted = zero_matrix<Rational>(m, m);
  for (Index j = 0; j < m; ++j) {
    const Vec image = op * space.vector(j);
    const auto c = space.coordinates(image);
    if (!c) throw NotAbelian("ad of a Cartan element does not preserve a weight space");
    restricted.col(j) = *c;
  }

  Eigen::MatrixXd approx(m, m);
  for (Index r = 0; r < m; ++r) {
    for (Index c = 0; c < m; ++c) approx(r, c) = restricted(r, c).convert_to<double>();
  }
  const Eigen::EigenSolver<Eigen::MatrixXd> solver(approx, false);
  std::vector<Rational> candidates;
  for (Index k = 0; k < m; ++k) {
    const auto ev = solver.eigenvalues()[k];
    if (std::abs(ev.imag()) > 1e-6) {
      throw NotDiagonalizable("ad of a Cartan element has a non-real eigenvalue");
    }
    const Rational q = rationalize(ev.real());
    if (std::find(candidates.begin(), candidates.end(), q) == candidates.end()) candidates.push_back(q);
  }
  std::sort(candidates.begin(), candidates.end());

  std::vector<std::pair<Rational, Subspace>> out;
  Index total = 0;
  for (const auto& lambda : candidates) {
    Mat shifted = restricted;
    for (Index k = 0; k < m; ++k) shifted(k, k) -= lambda;
    const Subspace local = kernel(shifted);
    if (local.dim() == 0) continue;
    std::vector<Vec> vectors;
    for (Index k = 0; k < local.dim(); ++k) {
      Vec v = zero_vector<Rational>(space.ambient());
      for (Index j = 0; j < m; ++j) {
        if (!local.rows()(k, j).is_zero()) v += local.rows()(k, j) * space.vector(j);
      }
      vectors.push_back(std::move(v));
    }
    total += local.dim();
    out.emplace_back(lambda, Subspace::span(vectors, space.ambient()));
  }
  if (total != m) {
    throw NotDiagonalizable("ad of a Cartan element is not diagonalizable over the rationals (eigenspaces span " +
                            std::to_string(total) + " of " + std::to_string(m) + " dimensions)");
  }
  return out;
}

}  // namespace

RootDecomposition root_decomposition(const LieAlgebra& g, const Subspace& cartan) {
  if (cartan.ambient() != g.dim()) throw UsageError("root_decomposition: Cartan ambient dimension mismatch");
  for (Index a = 0; a < cartan.dim(); ++a) {
    for (Index b = a + 1; b < cartan.dim(); ++b) {
      if (!is_zero_vector(g.bracket(cartan.vector(a), cartan.vector(b)))) {
        throw NotAbelian("Cartan basis elements " + std::to_string(a) + " and " + std::to_string(b) +
                         " do not commute");
      }
    }
  }

  std::vector<std::pair<std::vector<Rational>, Subspace>> pieces{{{}, Subspace::full(g.dim())}};
  for (Index a = 0; a < cartan.dim(); ++a) {
    const Mat op = g.ad(cartan.vector(a));
    std::vector<std::pair<std::vector<Rational>, Subspace>> next;
    for (const auto& [weights, space] : pieces) {
      for (auto& [lambda, sub] : split_eigenspaces(op, space)) {
        auto w = weights;
        w.push_back(lambda);
        next.emplace_back(std::move(w), std::move(sub));
      }
    }
    pieces = std::move(next);
  }

  RootDecomposition rd{cartan, {}};
  for (auto& [weights, space] : pieces) {
    const bool zero_weight = std::all_of(weights.begin(), weights.end(), [](const Rational& x) { return x.is_zero(); });
    if (zero_weight) {
      if (!(space == cartan)) {
        throw StructureError("zero weight space (dim " + std::to_string(space.dim()) +
                             ") differs from the Cartan subalgebra (dim " + std::to_string(cartan.dim()) + ")");
      }
      continue;
    }
    Vec root(static_cast<Index>(weights.size()));
    for (std::size_t k = 0; k < weights.size(); ++k) root[static_cast<Index>(k)] = weights[k];
    rd.roots.push_back({root, std::move(space)});
  }
  std::sort(rd.roots.begin(), rd.roots.end(), [](const RootSpace& x, const RootSpace& y) {
    return std::lexicographical_compare(x.root.begin(), x.root.end(), y.root.begin(), y.root.end());
  });
  return rd;
}

bool check_root_brackets(const LieAlgebra& g, const RootDecomposition& rd) {
  for (const auto& a : rd.roots) {
    for (const auto& b : rd.roots) {
      const Vec sum = a.root + b.root;
      const Subspace* target = nullptr;
      if (is_zero_vector(sum)) {
        target = &rd.cartan;
      } else {
        for (const auto& c : rd.roots) {
          if (c.root == sum) target = &c.space;
        }
      }
      for (Index i = 0; i < a.space.dim(); ++i) {
        for (Index j = 0; j < b.space.dim(); ++j) {
          const Vec br = g.bracket(a.space.vector(i), b.space.vector(j));
          if (target == nullptr ? !is_zero_vector(br) : !target->contains(br)) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace lielab
