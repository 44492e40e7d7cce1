// Report audit. Everything here is substitution: products, brackets and
// comparisons against data stored in the report. Linear independence of a
// stored basis is read off its reduced echelon shape; nothing is eliminated.

#include "lielab/campaign.hpp"

#include "lielab/error.hpp"

#include <functional>
#include <map>
#include <optional>
#include <set>

namespace lielab {

namespace {

struct AuditFailure {
  std::string claim;
};

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("report lacks field '") + key + "'");
  return j.at(key);
}

std::vector<Vec> vec_list(const Json& j) {
  if (!j.is_array()) throw ParseError("expected a list of vectors");
  std::vector<Vec> out;
  for (const auto& v : j) out.push_back(vec_from_json(v));
  return out;
}

Vec stack(const Vec& a, const Vec& b) {
  Vec out(a.size() + b.size());
  out << a, b;
  return out;
}

Rational dot(const Vec& a, const Vec& b) {
  Rational s = 0;
  for (Index i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  }
  return s;
}

// Reduced echelon shape: leading entries 1, strictly increasing, and alone
// in their columns. Such rows are linearly independent.
std::optional<std::vector<Index>> echelon_pivots(const std::vector<Vec>& rows) {
  std::vector<Index> pivots;
  for (const auto& r : rows) {
    Index p = 0;
    while (p < r.size() && r[p].is_zero()) ++p;
    if (p == r.size() || r[p] != 1) return std::nullopt;
    if (!pivots.empty() && p <= pivots.back()) return std::nullopt;
    pivots.push_back(p);
  }
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = 0; b < rows.size(); ++b) {
      if (a != b && !rows[b][pivots[a]].is_zero()) return std::nullopt;
    }
  }
  return pivots;
}

// For rows in reduced echelon shape, w lies in their span iff it equals the
// combination given by its pivot entries.
bool in_echelon_span(const std::vector<Vec>& rows, const std::vector<Index>& pivots, const Vec& w) {
  Vec rest = w;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const Rational c = w[pivots[r]];
    if (!c.is_zero()) rest -= c * rows[r];
  }
  return is_zero_vector(rest);
}

class AlgebraData {
 public:
  AlgebraData(const Json& t) {
    n_ = field(t, "dim").get<Index>();
    spec_ = spec_from_json(field(t, "spec"));
    c_ = StructureConstants(n_);
    for (const auto& e : field(t, "structure_constants")) {
      const Index i = e.at(0).get<Index>(), j = e.at(1).get<Index>(), k = e.at(2).get<Index>();
      if (i < 0 || j <= i || j >= n_ || k < 0 || k >= n_) throw ParseError("structure constant index out of range");
      const Rational v = rational_from_json(e.at(3));
      c_.set(i, j, k, v);
      c_.set(j, i, k, -v);
    }
    if (spec_.family != Family::custom) {
      for (const auto& b : field(t, "basis")) basis_.push_back(fin_matrix_from_json(b));
      for (const auto& f : field(t, "coordinate_functionals")) functionals_.push_back(fin_matrix_from_json(f));
      ambient_ = spec_.family == Family::sl ? spec_.indices : spec_.indices.doubled();
    }
  }

  Index dim() const { return n_; }
  const AlgebraSpec& spec() const { return spec_; }
  const StructureConstants& constants() const { return c_; }
  const std::vector<FinMatrix>& basis() const { return basis_; }
  const std::vector<FinMatrix>& functionals() const { return functionals_; }
  const IndexSet& ambient() const { return ambient_; }
  bool matrix_family() const { return spec_.family != Family::custom; }

  Vec unit(Index k) const {
    Vec e = zero_vector<Rational>(n_);
    e[k] = 1;
    return e;
  }

  Vec bracket(const Vec& u, const Vec& v) const {
    Vec out = zero_vector<Rational>(n_);
    for (Index i = 0; i < n_; ++i) {
      if (u[i].is_zero()) continue;
      for (Index j = 0; j < n_; ++j) {
        if (v[j].is_zero()) continue;
        const Rational s = u[i] * v[j];
        for (const auto& [k, c] : c_.bracket_of_basis(i, j)) out[k] += s * c;
      }
    }
    return out;
  }

  Mat ad(const Vec& a) const {
    Mat m(n_, n_);
    for (Index j = 0; j < n_; ++j) m.col(j) = bracket(a, unit(j));
    return m;
  }

  FinMatrix matrix(const Vec& coords) const {
    FinMatrix x;
    for (Index k = 0; k < n_; ++k) {
      if (!coords[k].is_zero()) x += coords[k] * basis_[static_cast<std::size_t>(k)];
    }
    return x;
  }

 private:
  Index n_ = 0;
  AlgebraSpec spec_;
  StructureConstants c_;
  std::vector<FinMatrix> basis_;
  std::vector<FinMatrix> functionals_;
  IndexSet ambient_;
};

Mat map_of(const Vec& flat, Index n) {
  if (flat.size() != n * n) throw ParseError("flattened map has the wrong length");
  Mat m(n, n);
  for (Index r = 0; r < n; ++r) {
    for (Index c = 0; c < n; ++c) m(r, c) = flat[r * n + c];
  }
  return m;
}

Rational pairing(const FinMatrix& functional, const FinMatrix& x) {
  Rational s = 0;
  for (const auto& [key, w] : functional.entries()) s += w * x.at(key.first, key.second);
  return s;
}

Index family_dim(const AlgebraSpec& spec) {
  const auto m = static_cast<Index>(spec.indices.size());
  switch (spec.family) {
    case Family::sl:
      return m * m - 1;
    case Family::o:
      return 2 * m * m - m;
    case Family::sp:
      return 2 * m * m + m;
    case Family::custom:
      break;
  }
  return -1;
}

class Auditor {
 public:
  AuditResult run(const Json& report) {
    if (report.is_object() && report.empty()) return empty();
    if (field(report, "schema_version") != kSchemaVersion) throw ParseError("unsupported schema_version");
    const Json& targets = field(report, "targets");
    if (!targets.is_array()) throw ParseError("targets must be a list");
    if (targets.empty()) return empty();
    try {
      bool all = true;
      for (const auto& t : targets) all = audit_target(t) && all;
      for (const auto& level : field(report, "towers")) all = audit_tower(level) && all;
      claim(field(report, "passed").get<bool>() == all, "overall verdict matches the per-target results");
    } catch (const AuditFailure& f) {
      result_.passed = false;
      result_.first_failure = f.claim;
    } catch (const Json::exception& e) {
      throw ParseError(std::string("malformed report: ") + e.what());
    }
    return result_;
  }

 private:
  AuditResult empty() {
    result_.warnings.push_back("report contains no targets; nothing to verify");
    return result_;
  }

  void claim(bool ok, const std::string& what) {
    ++result_.claims_checked;
    if (!ok) throw AuditFailure{what};
  }

  bool audit_target(const Json& t) {
    const std::string name = field(t, "name").get<std::string>();
    const AlgebraData g(t);
    algebras_.emplace(name, g);
    const std::string at = name + ": ";
    audit_algebra(g, t, at);

    std::vector<Mat> der;
    if (t.contains("derivation_basis")) {
      const auto rows = vec_list(t.at("derivation_basis"));
      claim(echelon_pivots(rows).has_value(), at + "derivation basis is in reduced echelon form");
      for (std::size_t k = 0; k < rows.size(); ++k) {
        der.push_back(map_of(rows[k], g.dim()));
        audit_leibniz(g, der.back(), at + "derivation basis element " + std::to_string(k) + " satisfies Leibniz");
      }
    }

    const Json& checks = field(t, "checks");
    const bool exploratory = field(t, "exploratory").get<bool>();
    bool passed = true, inconclusive = false;
    if (checks.contains("derivations")) passed = audit_derivations(g, der, checks.at("derivations"), at) && passed;
    if (checks.contains("locder")) {
      const Json& l = checks.at("locder");
      passed = audit_locder(g, der, l, exploratory, at) && passed;
      inconclusive = l.at("verdict") != "ProvenEqual";
    }
    if (checks.contains("forms")) passed = audit_forms(g, der, checks.at("forms"), at) && passed;
    if (checks.contains("twolocal")) passed = audit_twolocal(g, der, checks.at("twolocal"), at) && passed;
    if (checks.contains("roots")) passed = audit_roots(g, checks.at("roots"), at) && passed;
    const bool target_passed = passed && !inconclusive;
    claim(field(t, "passed").get<bool>() == target_passed, at + "target verdict matches its checks");
    return target_passed || exploratory;
  }

  void audit_algebra(const AlgebraData& g, const Json& t, const std::string& at) {
    const Index n = g.dim();
    claim(field(t, "checksum").get<std::string>() == structure_checksum(g.constants()),
          at + "structure-constant checksum");
    if (!g.matrix_family()) {
      claim(g.spec().constants == g.constants(), at + "listed structure constants match the spec");
      for (Index i = 0; i < n; ++i) {
        for (Index j = i + 1; j < n; ++j) {
          for (Index k = j + 1; k < n; ++k) {
            const Vec e_i = g.unit(i), e_j = g.unit(j), e_k = g.unit(k);
            const Vec jac = g.bracket(g.bracket(e_i, e_j), e_k) + g.bracket(g.bracket(e_j, e_k), e_i) +
                            g.bracket(g.bracket(e_k, e_i), e_j);
            claim(is_zero_vector(jac), at + "Jacobi identity on basis triple (" + std::to_string(i) + ", " +
                                           std::to_string(j) + ", " + std::to_string(k) + ")");
          }
        }
      }
      return;
    }
    claim(n == family_dim(g.spec()), at + "dimension matches the family formula");
    claim(static_cast<Index>(g.basis().size()) == n && static_cast<Index>(g.functionals().size()) == n,
          at + "basis and coordinate functional counts");
    const FinMatrix q = g.spec().family == Family::sl
                            ? FinMatrix{}
                            : q_form(g.spec().indices,
                                     g.spec().family == Family::o ? FormKind::symmetric : FormKind::alternating);
    for (Index k = 0; k < n; ++k) {
      const FinMatrix& b = g.basis()[static_cast<std::size_t>(k)];
      const std::string which = at + "basis element " + std::to_string(k);
      claim(b.support().is_subset_of(g.ambient()), which + " is supported on the ambient index set");
      if (g.spec().family == Family::sl) {
        claim(trace(b).is_zero(), which + " is traceless");
      } else {
        claim((mul(transpose(b), q) + mul(q, b)).is_zero(), which + " preserves the form");
      }
      for (Index l = 0; l < n; ++l) {
        const Rational v = pairing(g.functionals()[static_cast<std::size_t>(k)], g.basis()[static_cast<std::size_t>(l)]);
        claim(v == (k == l ? 1 : 0), at + "coordinate functional " + std::to_string(k) + " on basis element " +
                                         std::to_string(l));
      }
    }
    for (Index i = 0; i < n; ++i) {
      for (Index j = i + 1; j < n; ++j) {
        claim(bracket(g.basis()[static_cast<std::size_t>(i)], g.basis()[static_cast<std::size_t>(j)]) ==
                  g.matrix(g.constants().bracket_vector(i, j)),
              at + "structure constants of [b" + std::to_string(i) + ", b" + std::to_string(j) + "]");
      }
    }
  }

  void audit_leibniz(const AlgebraData& g, const Mat& d, const std::string& what) {
    const Index n = g.dim();
    for (Index i = 0; i < n; ++i) {
      const Vec di = d.col(i);
      for (Index j = i + 1; j < n; ++j) {
        Vec lhs = zero_vector<Rational>(n);
        for (const auto& [m, c] : g.constants().bracket_of_basis(i, j)) lhs += c * Vec(d.col(m));
        const Vec rhs = g.bracket(di, g.unit(j)) + g.bracket(g.unit(i), Vec(d.col(j)));
        if (lhs != rhs) claim(false, what + " on (" + std::to_string(i) + ", " + std::to_string(j) + ")");
      }
    }
    claim(true, what);
  }

  static Mat combine(const std::vector<Mat>& der, const Vec& c, Index n) {
    if (static_cast<std::size_t>(c.size()) != der.size()) throw ParseError("coefficient vector has the wrong length");
    Mat m = zero_matrix<Rational>(n, n);
    for (std::size_t k = 0; k < der.size(); ++k) {
      if (!c[static_cast<Index>(k)].is_zero()) m += c[static_cast<Index>(k)] * der[k];
    }
    return m;
  }

  bool audit_derivations(const AlgebraData& g, const std::vector<Mat>& der, const Json& d, const std::string& at) {
    const Index n = g.dim();
    const auto dim = field(d, "dim").get<Index>();
    claim(dim == static_cast<Index>(der.size()), at + "derivation dimension equals the basis size");
    const bool has_expected = !field(d, "expected_dim").is_null();
    if (has_expected) {
      const auto expected = d.at("expected_dim").get<Index>();
      const Index m = static_cast<Index>(g.spec().indices.size());
      const Index formula = g.spec().family == Family::sl ? m * m - 1
                            : g.spec().family == Family::o ? 2 * m * m - m
                                                           : 2 * m * m + m;
      claim(expected == formula, at + "expected derivation dimension matches the family formula");
    }

    const auto expansions = vec_list(field(d, "inner_expansions"));
    claim(static_cast<Index>(expansions.size()) == n, at + "one inner expansion per basis element");
    for (Index i = 0; i < n; ++i) {
      claim(g.ad(g.unit(i)) == combine(der, expansions[static_cast<std::size_t>(i)], n),
            at + "ad(b" + std::to_string(i) + ") expands over the derivation basis");
    }
    const bool der_in_inner = field(d, "der_in_inner").get<bool>();
    if (der_in_inner) {
      const auto pre = vec_list(field(d, "inner_preimages"));
      claim(pre.size() == der.size(), at + "one inner preimage per derivation basis element");
      for (std::size_t k = 0; k < der.size(); ++k) {
        claim(g.ad(pre[k]) == der[k], at + "inner preimage " + std::to_string(k) + " maps to its derivation");
      }
    }
    claim(field(d, "inner_in_der").get<bool>(), at + "inner derivations lie in the derivation space");
    const bool equal = der_in_inner;
    claim(field(d, "der_equals_inner").get<bool>() == equal, at + "Der = Inner flag");
    if (equal) claim(field(d, "inner_dim").get<Index>() == dim, at + "inner dimension under Der = Inner");
    else result_.warnings.push_back(at + "inner dimension not re-derived (Der and Inner differ)");
    const bool passed = !has_expected || (dim == d.at("expected_dim").get<Index>() && equal);
    claim(field(d, "passed").get<bool>() == passed, at + "derivations verdict");
    return passed;
  }

  void audit_point_refutation(const std::vector<Mat>& der, const Vec& x, const Vec& value, const Vec& y,
                              const std::string& what) {
    claim(y.size() == value.size(), what + ": certificate length");
    for (std::size_t k = 0; k < der.size(); ++k) {
      claim(dot(y, Vec(der[k] * x)).is_zero(), what + ": certificate annihilates derivation " + std::to_string(k));
    }
    claim(dot(y, value) == 1, what + ": certificate separates the target value");
  }

  bool audit_locder(const AlgebraData& g, const std::vector<Mat>& der, const Json& l, bool exploratory,
                    const std::string& at) {
    const Index n = g.dim();
    const auto bound = vec_list(field(l, "bound_basis"));
    claim(echelon_pivots(bound).has_value(), at + "bound basis is in reduced echelon form");
    claim(field(l, "bound_dim").get<Index>() == static_cast<Index>(bound.size()), at + "bound dimension");
    const auto round_dims = field(l, "round_dims").get<std::vector<Index>>();
    claim(!round_dims.empty() && round_dims.back() == static_cast<Index>(bound.size()), at + "final round dimension");
    const std::string verdict = field(l, "verdict").get<std::string>();
    if (verdict == "ProvenEqual") {
      const auto expansions = vec_list(field(l, "expansions"));
      claim(expansions.size() == bound.size(), at + "one expansion per bound basis vector");
      for (std::size_t k = 0; k < bound.size(); ++k) {
        claim(map_of(bound[k], n) == combine(der, expansions[k], n),
              at + "bound basis vector " + std::to_string(k) + " expands over the derivation basis");
      }
      claim(bound.size() == der.size(), at + "bound and derivation dimensions agree");
      claim(field(l, "excess_dim").get<Index>() == 0, at + "no excess when proven equal");
    } else {
      claim(verdict == "Inconclusive", at + "verdict is ProvenEqual or Inconclusive");
      const auto excess = vec_list(field(l, "excess_basis"));
      claim(echelon_pivots(excess).has_value(), at + "excess basis is in reduced echelon form");
      claim(field(l, "excess_dim").get<Index>() == static_cast<Index>(excess.size()), at + "excess dimension");
      claim(!excess.empty(), at + "inconclusive verdict carries an excess");
    }
    if (!field(l, "identity_refutation").is_null()) {
      const Json& r = l.at("identity_refutation");
      const Vec x = vec_from_json(field(r, "point"));
      audit_point_refutation(der, x, x, vec_from_json(field(r, "certificate")), at + "identity refutation");
    }
    if (l.contains("candidates")) {
      std::size_t c = 0;
      for (const auto& cand : l.at("candidates")) {
        const std::string which = at + "candidate " + std::to_string(c++);
        const Mat delta = map_of(vec_from_json(field(cand, "map")), n);
        for (const auto& e : field(cand, "evidence")) {
          const Vec x = vec_from_json(field(e, "point"));
          claim(Vec(combine(der, vec_from_json(field(e, "coefficients")), n) * x) == Vec(delta * x),
                which + ": pointwise witness");
        }
        if (!field(cand, "refuted").is_null()) {
          const Json& r = cand.at("refuted");
          const Vec x = vec_from_json(field(r, "point"));
          audit_point_refutation(der, x, Vec(delta * x), vec_from_json(field(r, "certificate")), which + ": refutation");
        }
        bool leibniz = true;
        for (Index i = 0; i < n && leibniz; ++i) {
          for (Index j = 0; j < n && leibniz; ++j) {
            Vec lhs = zero_vector<Rational>(n);
            for (const auto& [m, v] : g.constants().bracket_of_basis(i, j)) lhs += v * Vec(delta.col(m));
            leibniz = lhs == g.bracket(Vec(delta.col(i)), g.unit(j)) + g.bracket(g.unit(i), Vec(delta.col(j)));
          }
        }
        claim(field(cand, "is_derivation").get<bool>() == leibniz, which + ": derivation flag");
      }
    }
    const bool passed = verdict == "ProvenEqual" || exploratory;
    claim(field(l, "passed").get<bool>() == passed, at + "locder verdict");
    return passed;
  }

  static Mat killing(const AlgebraData& g) {
    const Index n = g.dim();
    const auto& c = g.constants();
    Mat k = zero_matrix<Rational>(n, n);
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) {
        Rational s = 0;
        for (Index m = 0; m < n; ++m) {
          for (const auto& [r, v] : c.bracket_of_basis(i, m)) {
            const Rational& w = c(j, r, m);
            if (!w.is_zero()) s += v * w;
          }
        }
        k(i, j) = s;
      }
    }
    return k;
  }

  bool audit_forms(const AlgebraData& g, const std::vector<Mat>& der, const Json& f, const std::string& at) {
    const Index n = g.dim();
    const Mat gram = mat_from_json(field(f, "killing_gram"));
    claim(gram == killing(g), at + "Killing Gram matrix");
    const bool nondegenerate = field(f, "nondegenerate").get<bool>();
    if (nondegenerate) {
      const Mat inv = mat_from_json(field(f, "gram_inverse"));
      claim(inv.rows() == n && inv.cols() == n && Mat(gram * inv) == Mat::Identity(n, n),
            at + "Gram matrix times its inverse is the identity");
      claim(field(f, "rank").get<Index>() == n, at + "full rank");
    } else {
      const Vec v = vec_from_json(field(f, "radical_vector"));
      claim(!is_zero_vector(v) && is_zero_vector(Vec(gram * v)), at + "radical vector of a degenerate form");
    }
    bool invariant = true;
    const auto& c = g.constants();
    for (Index i = 0; i < n && invariant; ++i) {
      for (Index j = 0; j < n && invariant; ++j) {
        for (Index k = 0; k < n && invariant; ++k) {
          // k([b_i, b_j], b_k) + k(b_j, [b_i, b_k])
          Rational s = 0;
          for (const auto& [m, v] : c.bracket_of_basis(i, j)) s += v * gram(m, k);
          for (const auto& [m, v] : c.bracket_of_basis(i, k)) s += v * gram(j, m);
          invariant = s.is_zero();
        }
      }
    }
    claim(field(f, "invariance_zero").get<bool>() == invariant, at + "invariance residuals");
    bool der_invariant = true;
    for (const auto& d : der) der_invariant = der_invariant && Mat(d.transpose() * gram + gram * d).isZero(0);
    claim(field(f, "derivation_invariance_zero").get<bool>() == der_invariant, at + "derivation invariance residuals");
    if (g.matrix_family()) {
      const Mat tg = mat_from_json(field(f, "trace_gram"));
      bool ok = tg.rows() == n && tg.cols() == n;
      for (Index i = 0; i < n && ok; ++i) {
        for (Index j = 0; j < n && ok; ++j) {
          ok = tg(i, j) == trace(mul(g.basis()[static_cast<std::size_t>(i)], g.basis()[static_cast<std::size_t>(j)]));
        }
      }
      claim(ok, at + "trace form Gram matrix");
    }
    const bool passed = invariant && der_invariant && (nondegenerate || !g.matrix_family());
    claim(field(f, "passed").get<bool>() == passed, at + "forms verdict");
    return passed;
  }

  void audit_pair_refutation(const AlgebraData& g, const std::vector<Mat>& der, const Json& r,
                             const std::function<Vec(const Vec&)>& nabla, const std::string& what) {
    if (field(r, "infeasible_pair").is_null()) return;
    const Vec x = vec_from_json(r.at("infeasible_pair").at(0)), y = vec_from_json(r.at("infeasible_pair").at(1));
    const Vec cert = vec_from_json(field(r, "certificate"));
    claim(cert.size() == 2 * g.dim(), what + ": certificate length");
    for (std::size_t k = 0; k < der.size(); ++k) {
      claim(dot(cert, stack(Vec(der[k] * x), Vec(der[k] * y))).is_zero(),
            what + ": certificate annihilates derivation " + std::to_string(k));
    }
    claim(dot(cert, stack(nabla(x), nabla(y))) == 1, what + ": certificate separates the rule values");
  }

  bool audit_twolocal(const AlgebraData& g, const std::vector<Mat>& der, const Json& t, const std::string& at) {
    if (t.contains("skipped")) {
      result_.warnings.push_back(at + "2-local check skipped: " + t.at("skipped").get<std::string>());
      claim(field(t, "passed").get<bool>(), at + "skipped 2-local check is not a failure");
      return true;
    }
    const Index n = g.dim();
    bool passed = true;
    std::size_t s = 0;
    for (const auto& sample : field(t, "samples")) {
      const std::string which = at + "2-local sample " + std::to_string(s++);
      const Vec a = vec_from_json(field(sample, "a"));
      const bool recovered = field(sample, "recovered").get<bool>();
      if (recovered) {
        claim(field(sample, "verdict") == "ProvenEqual", which + ": verdict");
        claim(combine(der, vec_from_json(field(sample, "coefficients")), n) == g.ad(a),
              which + ": recovered derivation equals ad(a)");
      }
      passed = passed && recovered;
    }

    const Json& id = field(t, "identity");
    const bool id_refuted = field(id, "refuted").get<bool>() && !field(id, "refutation").at("certificate").is_null();
    if (id_refuted) {
      audit_pair_refutation(g, der, id.at("refutation"), [](const Vec& x) { return x; }, at + "identity rule");
    }
    passed = passed && id_refuted;

    const Json& br = field(t, "branching");
    const Vec a_zero = vec_from_json(field(br, "a_zero")), a_nonzero = vec_from_json(field(br, "a_nonzero"));
    const auto coord = field(br, "coordinate").get<Index>();
    auto nabla = [&](const Vec& x) { return g.bracket(x[coord].is_zero() ? a_zero : a_nonzero, x); };
    bool br_refuted = false;
    if (field(br, "refuted").get<bool>()) {
      const Json& r = br.at("refutation");
      audit_pair_refutation(g, der, r, nabla, at + "branching rule");
      if (field(r, "stage") == "additivity") {
        const auto points = vec_list(field(r, "points"));
        claim(points.size() == 2, at + "branching rule: additivity probe is a pair");
        const Vec residual = vec_from_json(field(r, "residual"));
        const Mat gram = killing(g);
        const Vec expected = gram * Vec(nabla(Vec(points[0] + points[1])) - nabla(points[0]) - nabla(points[1]));
        claim(residual == expected, at + "branching rule: additivity residual");
        br_refuted = !is_zero_vector(residual);
      }
    }
    passed = passed && br_refuted;
    claim(field(t, "passed").get<bool>() == passed, at + "2-local verdict");
    return passed;
  }

  bool audit_roots(const AlgebraData& g, const Json& r, const std::string& at) {
    if (r.contains("skipped")) {
      result_.warnings.push_back(at + "root check skipped: " + r.at("skipped").get<std::string>());
      return true;
    }
    const auto cartan = vec_list(field(r, "cartan"));
    const auto cartan_pivots = echelon_pivots(cartan);
    claim(cartan_pivots.has_value(), at + "Cartan basis is in reduced echelon form");
    for (std::size_t a = 0; a < cartan.size(); ++a) {
      for (std::size_t b = a + 1; b < cartan.size(); ++b) {
        claim(is_zero_vector(g.bracket(cartan[a], cartan[b])), at + "Cartan subalgebra is abelian");
      }
    }
    struct Space {
      Vec root;
      std::vector<Vec> rows;
      std::vector<Index> pivots;
    };
    std::vector<Space> spaces;
    std::set<std::vector<std::string>> seen;
    Index total = static_cast<Index>(cartan.size());
    for (const auto& entry : field(r, "roots")) {
      Space s{vec_from_json(field(entry, "root")), vec_list(field(entry, "basis")), {}};
      const std::string which = at + "root space " + std::to_string(spaces.size());
      claim(s.root.size() == static_cast<Index>(cartan.size()) && !is_zero_vector(s.root), which + ": nonzero root");
      claim(seen.insert(field(entry, "root").get<std::vector<std::string>>()).second, which + ": distinct root");
      auto p = echelon_pivots(s.rows);
      claim(p.has_value() && !s.rows.empty(), which + ": basis in reduced echelon form");
      s.pivots = *p;
      for (const auto& v : s.rows) {
        for (std::size_t a = 0; a < cartan.size(); ++a) {
          claim(g.bracket(cartan[a], v) == s.root[static_cast<Index>(a)] * v, which + ": eigenvector equation");
        }
      }
      total += static_cast<Index>(s.rows.size());
      spaces.push_back(std::move(s));
    }
    // Joint eigenvectors for distinct weights are independent, so the count
    // settles the direct sum.
    claim(total == g.dim(), at + "Cartan and root spaces exhaust the algebra");
    claim(field(r, "root_count").get<std::size_t>() == spaces.size(), at + "root count");

    bool brackets = true;
    for (const auto& s : spaces) {
      for (const auto& t : spaces) {
        const Vec sum = s.root + t.root;
        const Space* target = nullptr;
        for (const auto& u : spaces) {
          if (u.root == sum) target = &u;
        }
        for (const auto& v : s.rows) {
          for (const auto& w : t.rows) {
            const Vec b = g.bracket(v, w);
            if (is_zero_vector(sum)) brackets = brackets && in_echelon_span(cartan, *cartan_pivots, b);
            else if (target) brackets = brackets && in_echelon_span(target->rows, target->pivots, b);
            else brackets = brackets && is_zero_vector(b);
          }
        }
      }
    }
    claim(field(r, "brackets_ok").get<bool>() == brackets, at + "root bracket relations");
    claim(field(r, "passed").get<bool>() == brackets, at + "roots verdict");
    return brackets;
  }

  bool audit_tower(const Json& level) {
    const std::string small_name = field(level, "small").get<std::string>();
    const std::string big_name = field(level, "big").get<std::string>();
    const std::string at = "tower " + small_name + " < " + big_name + ": ";
    const auto s = algebras_.find(small_name), b = algebras_.find(big_name);
    if (s == algebras_.end() || b == algebras_.end()) throw ParseError("tower level names an unknown target");
    const AlgebraData& small = s->second;
    const AlgebraData& big = b->second;
    claim(small.matrix_family() && small.spec().family == big.spec().family &&
              small.spec().indices.is_subset_of(big.spec().indices),
          at + "levels form a chain in one family");
    const IndexSet& I = small.ambient();

    bool projection = true;
    for (const auto& pair : field(level, "projection_pairs")) {
      const FinMatrix X = big.matrix(vec_from_json(pair.at(0))), Y = small.matrix(vec_from_json(pair.at(1)));
      projection = projection && project(bracket(X, Y), I) == bracket(project(X, I), project(Y, I));
    }
    claim(field(level, "projection_ok").get<bool>() == projection, at + "projection identity on logged pairs");

    bool restriction = true;
    for (const auto& m : field(level, "inner_maps")) {
      const FinMatrix A = big.matrix(vec_from_json(field(m, "a")));
      const FinMatrix A_small = small.matrix(vec_from_json(field(m, "a_small")));
      // pi_I(a) - a_small must be central: zero, or a multiple of 1_I for sl.
      const FinMatrix diff = project(A, I) - A_small;
      const Rational t = diff.is_zero() ? Rational(0) : diff.at(I[0], I[0]);
      restriction = restriction && diff == t * identity(I) && (t.is_zero() || small.spec().family == Family::sl);
      for (const auto& x : small.basis()) {
        restriction = restriction && project(bracket(A, x), I) == bracket(A_small, x);
      }
    }
    claim(field(level, "restriction_ok").get<bool>() == restriction, at + "restricted inner maps");
    const bool passed = projection && restriction;
    claim(field(level, "passed").get<bool>() == passed, at + "tower verdict");
    return passed;
  }

  AuditResult result_;
  std::map<std::string, AlgebraData> algebras_;
};

}  // namespace

AuditResult check_report(const Json& report) { return Auditor().run(report); }

AuditResult check_report_text(std::string_view text) {
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) {
    AuditResult r;
    r.warnings.push_back("report is empty; nothing to verify");
    return r;
  }
  return check_report(parse_json_text(text));
}

}  // namespace lielab
