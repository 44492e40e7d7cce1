#include "lielab/campaign.hpp"

#include "lielab/derivations.hpp"
#include "lielab/error.hpp"
#include "lielab/forms.hpp"
#include "lielab/locality.hpp"
#include "lielab/sampling.hpp"

#include <chrono>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace lielab {

namespace {

constexpr const char* kToolVersion = "1.0.0";

const char* const kCheckNames[] = {"derivations", "locder", "twolocal", "forms", "tower", "roots"};

bool* check_flag(Checks& c, const std::string& name) {
  if (name == "derivations") return &c.derivations;
  if (name == "locder") return &c.locder;
  if (name == "twolocal") return &c.twolocal;
  if (name == "forms") return &c.forms;
  if (name == "tower") return &c.tower;
  if (name == "roots") return &c.roots;
  return nullptr;
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent stream per named task so adding a target does not shift others.
std::uint64_t derive_seed(std::uint64_t seed, const std::string& tag) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : tag) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return splitmix(seed ^ splitmix(h));
}

int parse_int(const std::string& s, const std::string& context) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw ParseError("expected an integer in '" + context + "'");
  }
  if (used != s.size()) throw ParseError("expected an integer in '" + context + "'");
  return v;
}

void check_size(Family f, int n) {
  if (f == Family::custom) throw ParseError("custom targets need an explicit spec");
  if (n < min_size(f) || n > max_size(f)) {
    throw ParseError(to_string(f) + " size " + std::to_string(n) + " outside the supported range " +
                     std::to_string(min_size(f)) + ".." + std::to_string(max_size(f)));
  }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Json vec_list(const std::vector<Vec>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

Json rows_of(const Subspace& s) { return to_json(s.rows()); }

Json refutation_json(const TwoLocalRefutation& r) {
  Json out;
  out["stage"] = r.stage;
  out["points"] = vec_list(r.points);
  out["residual"] = r.residual.size() ? to_json(r.residual) : Json(nullptr);
  out["lambda"] = to_string(r.lambda);
  if (r.infeasible_pair) {
    out["infeasible_pair"] = {to_json(r.infeasible_pair->first), to_json(r.infeasible_pair->second)};
  } else {
    out["infeasible_pair"] = nullptr;
  }
  out["certificate"] = r.infeasibility_certificate ? to_json(*r.infeasibility_certificate) : Json(nullptr);
  return out;
}

struct TargetRun {
  LieAlgebra g;
  std::optional<DerivationSpace> der;
};

class Runner {
 public:
  explicit Runner(const CampaignConfig& config) : config_(config) {}

  CampaignResult run() {
    const auto campaign_start = std::chrono::steady_clock::now();
    Json report;
    report["schema_version"] = kSchemaVersion;
    report["tool"] = "lielab";
    report["tool_version"] = kToolVersion;
    report["config"] = to_json(config_);
    report["targets"] = Json::array();
    Json failed = Json::array(), exploratory = Json::array();
    bool passed = true;

    for (const auto& target : config_.targets) {
      Json t = run_target(target);
      if (target.exploratory) {
        exploratory.push_back(target.name);
      } else if (!t["passed"].get<bool>()) {
        failed.push_back(target.name);
        passed = false;
      }
      report["targets"].push_back(std::move(t));
    }

    report["towers"] = Json::array();
    if (config_.checks.tower) {
      for (Json& level : run_towers()) {
        if (!level["passed"].get<bool>()) {
          failed.push_back("tower " + level["small"].get<std::string>() + "<" + level["big"].get<std::string>());
          passed = false;
        }
        report["towers"].push_back(std::move(level));
      }
    }

    report["summary"] = {{"targets", config_.targets.size()}, {"failed", failed}, {"exploratory", exploratory}};
    report["passed"] = passed;
    timings_["total"] = seconds_since(campaign_start);
    report["timings"] = timings_;
    return {std::move(report), passed};
  }

 private:
  template <class F>
  auto timed(const std::string& target, const std::string& step, F&& f) {
    const auto start = std::chrono::steady_clock::now();
    auto result = f();
    timings_[target][step] = seconds_since(start);
    return result;
  }

  Json run_target(const CampaignTarget& target) {
    const std::string& name = target.name;
    const std::uint64_t seed = derive_seed(config_.seed, name);
    Json t;
    t["name"] = name;
    t["label"] = label(target.spec);
    t["exploratory"] = target.exploratory;
    t["seed"] = seed;
    t["spec"] = to_json(target.spec);

    LieAlgebra g = timed(name, "build", [&] { return LieAlgebra::build(target.spec); });
    describe_algebra(g, t);

    TargetRun& run = runs_.emplace(name, TargetRun{g, std::nullopt}).first->second;
    const Checks& c = config_.checks;
    const bool need_der = c.derivations || c.locder || c.twolocal || c.forms;
    if (need_der) {
      run.der = timed(name, "derivation_space", [&] { return derivation_space(g); });
      t["derivation_basis"] = rows_of(run.der->basis());
    }

    bool passed = true;
    bool inconclusive = false;
    Json checks = Json::object();
    if (c.derivations) {
      checks["derivations"] = timed(name, "derivations", [&] { return derivations_check(g, *run.der); });
      passed = passed && checks["derivations"]["passed"].get<bool>();
    }
    if (c.locder) {
      checks["locder"] = timed(name, "locder", [&] { return locder_check(*run.der, seed, target.exploratory); });
      if (checks["locder"]["verdict"] != "ProvenEqual") inconclusive = true;
      passed = passed && checks["locder"]["passed"].get<bool>();
    }
    if (c.forms) {
      checks["forms"] = timed(name, "forms", [&] { return forms_check(g, *run.der); });
      passed = passed && checks["forms"]["passed"].get<bool>();
    }
    if (c.twolocal) {
      checks["twolocal"] = timed(name, "twolocal", [&] { return twolocal_check(g, *run.der, seed); });
      passed = passed && checks["twolocal"]["passed"].get<bool>();
    }
    if (c.roots) {
      checks["roots"] = timed(name, "roots", [&] { return roots_check(g); });
      passed = passed && checks["roots"]["passed"].get<bool>();
    }
    t["checks"] = std::move(checks);
    t["status"] = !passed ? "fail" : inconclusive ? "inconclusive" : "pass";
    t["passed"] = passed && !inconclusive;
    return t;
  }

  static void describe_algebra(const LieAlgebra& g, Json& t) {
    const Index n = g.dim();
    t["dim"] = n;
    t["checksum"] = structure_checksum(g.constants());
    Json constants = Json::array();
    for (Index i = 0; i < n; ++i) {
      for (Index j = i + 1; j < n; ++j) {
        for (const auto& [k, v] : g.constants().bracket_of_basis(i, j)) constants.push_back({i, j, k, to_string(v)});
      }
    }
    t["structure_constants"] = std::move(constants);
    if (!g.is_matrix_family()) return;
    Json basis = Json::array();
    for (const auto& b : g.basis()) basis.push_back(to_json(b));
    t["basis"] = std::move(basis);
    Json functionals = Json::array();
    for (const auto& f : g.coordinate_functionals()) {
      Json terms = Json::array();
      for (const auto& [key, v] : f.terms) terms.push_back({key.first.label(), key.second.label(), to_string(v)});
      functionals.push_back(std::move(terms));
    }
    t["coordinate_functionals"] = std::move(functionals);
  }

  static Json derivations_check(const LieAlgebra& g, const DerivationSpace& der) {
    Json out;
    out["dim"] = der.dim();
    std::optional<Index> expected;
    if (g.is_matrix_family()) expected = expected_derivation_dim(g.spec());
    out["expected_dim"] = expected ? Json(*expected) : Json(nullptr);

    const ClassificationCheck cls = check_classification(g, der);
    out["inner_dim"] = cls.inner_dim;
    out["inner_in_der"] = cls.inner_in_der;
    out["der_in_inner"] = cls.der_in_inner;
    out["inner_preimages"] = vec_list(cls.preimages);
    // Coefficients of ad(b_i) over the derivation basis: Inner <= Der by substitution.
    std::vector<Vec> inner_expansions;
    for (Index i = 0; i < g.dim(); ++i) {
      auto c = der.coefficients(inner_derivation(g, g.unit_vector(i)));
      if (!c) throw Error("inner derivation outside the derivation space");
      inner_expansions.push_back(*c);
    }
    out["inner_expansions"] = vec_list(inner_expansions);
    const bool passed = expected ? cls.passed() : true;
    out["der_equals_inner"] = cls.inner_in_der && cls.der_in_inner;
    out["passed"] = passed;
    return out;
  }

  Json locder_check(const DerivationSpace& der, std::uint64_t seed, bool exploratory) const {
    const LieAlgebra& g = der.algebra();
    const Index n = g.dim();
    const LocalDerBound bound = local_der_bound(der, seed, config_.max_rounds);
    const Certificate cert = certify_locder_equals_der(der, bound);
    Json out;
    out["seed"] = seed;
    out["max_rounds"] = config_.max_rounds;
    out["rounds"] = bound.rounds;
    out["round_dims"] = bound.round_dims;
    out["points"] = vec_list(bound.points);
    out["bound_dim"] = bound.space.dim();
    out["bound_basis"] = rows_of(bound.space);
    out["verdict"] = to_string(cert.verdict);
    out["expansions"] = vec_list(cert.expansions);
    out["excess_dim"] = cert.excess.dim();
    out["excess_basis"] = rows_of(cert.excess);

    // Negative control: the identity map, refuted at the first basis point
    // where no derivation matches it.
    Json refutation = nullptr;
    const LinMap id = LinMap::identity(n);
    for (Index i = 0; i < n; ++i) {
      auto w = witness_at(der, id, g.unit_vector(i));
      if (!feasible(w)) {
        refutation = {{"point", to_json(g.unit_vector(i))},
                      {"certificate", to_json(std::get<Infeasible<Rational>>(w).certificate)}};
        break;
      }
    }
    out["identity_refutation"] = refutation;

    if (exploratory && cert.verdict == Verdict::inconclusive) {
      out["candidates"] = candidates(der, cert.excess, seed);
    }
    out["passed"] = cert.verdict == Verdict::proven_equal || exploratory;
    return out;
  }

  // Excess elements of L over Der, each with pointwise witnesses at fresh
  // random points. These are candidates only: finitely many points prove
  // nothing about locality.
  Json candidates(const DerivationSpace& der, const Subspace& excess, std::uint64_t seed) const {
    const Index n = der.algebra().dim();
    Rng rng(splitmix(seed ^ 0x6576696465ULL));
    Json out = Json::array();
    for (Index k = 0; k < excess.dim(); ++k) {
      const LinMap delta = LinMap::from_flat(excess.vector(k), n);
      Json evidence = Json::array();
      Json refuted = nullptr;
      for (int p = 0; p < config_.evidence_points; ++p) {
        const Vec x = random_vector(n, rng);
        auto w = witness_at(der, delta, x);
        if (feasible(w)) {
          evidence.push_back({{"point", to_json(x)}, {"coefficients", to_json(std::get<Vec>(w))}});
        } else {
          refuted = {{"point", to_json(x)}, {"certificate", to_json(std::get<Infeasible<Rational>>(w).certificate)}};
          break;
        }
      }
      out.push_back({{"map", to_json(excess.vector(k))},
                     {"is_derivation", is_derivation(der.algebra(), delta)},
                     {"evidence", std::move(evidence)},
                     {"refuted", std::move(refuted)}});
    }
    return out;
  }

  static Json forms_check(const LieAlgebra& g, const DerivationSpace& der) {
    const Index n = g.dim();
    const BilinearForm kappa = killing_form(g);
    Json out;
    out["killing_gram"] = to_json(kappa.gram());
    out["rank"] = kappa.rank();
    out["nondegenerate"] = kappa.nondegenerate();
    if (auto inv = gram_inverse(kappa)) {
      out["gram_inverse"] = to_json(*inv);
      out["radical_vector"] = nullptr;
    } else {
      out["gram_inverse"] = nullptr;
      out["radical_vector"] = to_json(kernel(kappa.gram()).vector(0));
    }
    bool invariant = true;
    for (Index i = 0; i < n && invariant; ++i) {
      for (Index j = 0; j < n && invariant; ++j) {
        for (Index k = 0; k < n && invariant; ++k) {
          invariant = check_invariance(kappa, g.unit_vector(i), g.unit_vector(j), g.unit_vector(k)).is_zero();
        }
      }
    }
    bool der_invariant = true;
    for (Index d = 0; d < der.dim() && der_invariant; ++d) {
      const LinMap D = der.element(d);
      for (Index i = 0; i < n && der_invariant; ++i) {
        for (Index j = i; j < n && der_invariant; ++j) {
          der_invariant = check_derivation_invariance(kappa, D, g.unit_vector(i), g.unit_vector(j)).is_zero();
        }
      }
    }
    out["invariance_zero"] = invariant;
    out["derivation_invariance_zero"] = der_invariant;
    if (g.is_matrix_family()) out["trace_gram"] = to_json(trace_form(g).gram());
    // Degenerate forms are expected for non-semisimple custom algebras.
    out["passed"] = invariant && der_invariant && (kappa.nondegenerate() || !g.is_matrix_family());
    return out;
  }

  Json twolocal_check(const LieAlgebra& g, const DerivationSpace& der, std::uint64_t seed) const {
    const Index n = g.dim();
    const BilinearForm kappa = killing_form(g);
    Json out;
    if (!kappa.nondegenerate()) {
      out["skipped"] = "degenerate Killing form";
      out["passed"] = true;
      return out;
    }
    out["seed"] = seed;
    Rng rng(splitmix(seed ^ 0x326c6f63ULL));
    Json samples = Json::array();
    bool passed = true;
    for (int s = 0; s < config_.twolocal_samples; ++s) {
      const Vec a = random_vector(n, rng);
      const TwoLocalResult r = two_local_to_derivation(der, kappa, TwoLocalMap::inner(a));
      const bool recovered = r.derivation && r.recovered == inner_derivation(g, a);
      passed = passed && recovered;
      samples.push_back({{"a", to_json(a)},
                         {"verdict", to_string(r.verdict())},
                         {"recovered", recovered},
                         {"coefficients", r.derivation ? to_json(r.coefficients) : Json(nullptr)},
                         {"pairs_checked", r.pairs_checked},
                         {"probes_checked", r.probes_checked}});
    }
    out["samples"] = std::move(samples);

    const TwoLocalResult id = two_local_to_derivation(der, kappa, TwoLocalMap::identity());
    out["identity"] = {{"rule", "identity"},
                       {"refuted", id.refutation.has_value()},
                       {"refutation", id.refutation ? refutation_json(*id.refutation) : Json(nullptr)}};
    passed = passed && id.refutation && id.refutation->infeasibility_certificate;

    const Vec a_zero = zero_vector<Rational>(n), a_nonzero = g.unit_vector(0);
    const TwoLocalResult br = two_local_to_derivation(der, kappa, TwoLocalMap::branching_inner(a_zero, a_nonzero, 0));
    out["branching"] = {{"rule", "branching-inner"},
                        {"a_zero", to_json(a_zero)},
                        {"a_nonzero", to_json(a_nonzero)},
                        {"coordinate", 0},
                        {"refuted", br.refutation.has_value()},
                        {"refutation", br.refutation ? refutation_json(*br.refutation) : Json(nullptr)}};
    passed = passed && br.refutation && br.refutation->stage == "additivity" &&
             !is_zero_vector(br.refutation->residual);
    out["passed"] = passed;
    return out;
  }

  static Json roots_check(const LieAlgebra& g) {
    Json out;
    if (!g.is_matrix_family()) {
      out["skipped"] = "no standard Cartan subalgebra for custom algebras";
      out["passed"] = true;
      return out;
    }
    const RootDecomposition rd = root_decomposition(g, standard_cartan(g));
    out["cartan"] = rows_of(rd.cartan);
    Json roots = Json::array();
    for (const auto& r : rd.roots) roots.push_back({{"root", to_json(r.root)}, {"basis", rows_of(r.space)}});
    out["roots"] = std::move(roots);
    out["root_count"] = rd.roots.size();
    const bool brackets = check_root_brackets(g, rd);
    out["brackets_ok"] = brackets;
    out["passed"] = brackets;
    return out;
  }

  std::vector<Json> run_towers() {
    std::vector<Json> levels;
    for (Family f : {Family::sl, Family::o, Family::sp}) {
      std::map<int, const TargetRun*> by_size;
      std::map<int, std::string> names;
      for (const auto& target : config_.targets) {
        if (target.spec.family != f) continue;
        const int size = static_cast<int>(target.spec.indices.size());
        if (!(target.spec.indices == IndexSet::first(size))) continue;
        by_size.emplace(size, &runs_.at(target.name));
        names.emplace(size, target.name);
      }
      for (const auto& [size, small] : by_size) {
        auto next = by_size.find(size + 1);
        if (next == by_size.end()) continue;
        const std::string tag = names[size] + "<" + names[size + 1];
        levels.push_back(timed("towers", tag, [&] {
          return tower_level(*small, *next->second, names[size], names[size + 1]);
        }));
      }
    }
    return levels;
  }

  Json tower_level(const TargetRun& small_run, const TargetRun& big_run, const std::string& small_name,
                   const std::string& big_name) const {
    const LieAlgebra& small = small_run.g;
    const LieAlgebra& big = big_run.g;
    const IndexSet& I = small.ambient_indices();
    const std::uint64_t seed = derive_seed(config_.seed, "tower:" + small_name + "<" + big_name);
    Rng rng(seed);
    Json out;
    out["small"] = small_name;
    out["big"] = big_name;
    out["seed"] = seed;

    // Projection identity with x anywhere in the larger algebra and y in
    // the smaller one.
    bool projection_ok = true;
    Json pairs = Json::array();
    for (int p = 0; p < config_.tower_pairs; ++p) {
      const Vec x = random_sparse_vector(big.dim(), rng);
      const Vec y = random_sparse_vector(small.dim(), rng);
      const FinMatrix X = big.from_coords(x), Y = small.from_coords(y);
      projection_ok = projection_ok && project(bracket(X, Y), I) == bracket(project(X, I), project(Y, I));
      pairs.push_back({to_json(x), to_json(y)});
    }
    out["projection_pairs"] = std::move(pairs);
    out["projection_ok"] = projection_ok;

    // Restricted inner maps are local with witness ad(pi_I(a)) at every basis point.
    DerivationSpace small_der = small_run.der ? *small_run.der : derivation_space(small);
    bool restriction_ok = true;
    Json maps = Json::array();
    for (int m = 0; m < config_.tower_maps; ++m) {
      const Vec a = random_vector(big.dim(), rng);
      const LinMap restricted = restrict_local(big, small, inner_derivation(big, a));
      const Vec a_small = restrict_to(big, small, a);
      const LinMap predicted = inner_derivation(small, a_small);
      for (Index k = 0; k < small.dim(); ++k) {
        const Vec x = small.unit_vector(k);
        restriction_ok = restriction_ok && feasible(witness_at(small_der, restricted, x)) && restricted(x) == predicted(x);
      }
      maps.push_back({{"a", to_json(a)}, {"a_small", to_json(a_small)}});
    }
    out["inner_maps"] = std::move(maps);
    out["restriction_ok"] = restriction_ok;
    out["passed"] = projection_ok && restriction_ok;
    return out;
  }

  const CampaignConfig& config_;
  std::map<std::string, TargetRun> runs_;
  Json timings_ = Json::object();
};

}  // namespace

Checks Checks::parse(const std::string& list) {
  if (list == "all") return all();
  Checks c;
  std::stringstream ss(list);
  std::string item;
  bool any = false;
  while (std::getline(ss, item, ',')) {
    bool* flag = check_flag(c, item);
    if (!flag) throw ParseError("unknown check '" + item + "'");
    *flag = true;
    any = true;
  }
  if (!any) throw ParseError("empty check list");
  return c;
}

std::vector<std::string> Checks::names() const {
  std::vector<std::string> out;
  Checks copy = *this;
  for (const char* name : kCheckNames) {
    if (*check_flag(copy, name)) out.emplace_back(name);
  }
  return out;
}

int min_size(Family f) { return f == Family::sp ? 1 : 2; }
int max_size(Family) { return 6; }

std::vector<CampaignTarget> parse_family_ranges(const std::string& text) {
  std::vector<CampaignTarget> targets;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ParseError("expected family:range in '" + item + "'");
    const Family f = parse_family(item.substr(0, colon));
    const std::string range = item.substr(colon + 1);
    const auto dots = range.find("..");
    const int lo = parse_int(range.substr(0, dots), item);
    const int hi = dots == std::string::npos ? lo : parse_int(range.substr(dots + 2), item);
    if (hi < lo) throw ParseError("empty range in '" + item + "'");
    for (int n = lo; n <= hi; ++n) {
      check_size(f, n);
      AlgebraSpec spec = AlgebraSpec::family_member(f, n);
      targets.push_back({spec, label(spec), false});
    }
  }
  if (targets.empty()) throw ParseError("no targets given");
  return targets;
}

CampaignConfig config_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("config must be an object");
  static const std::set<std::string> known = {"schema_version", "targets",          "checks",     "seed",
                                              "max_rounds",     "twolocal_samples", "tower_pairs", "tower_maps",
                                              "evidence_points", "out"};
  for (const auto& [key, _] : j.items()) {
    if (!known.count(key)) throw ParseError("unknown config field '" + key + "'");
  }
  if (!j.contains("schema_version")) throw ParseError("config lacks schema_version");
  if (j.at("schema_version") != kSchemaVersion) throw ParseError("unsupported schema_version");

  CampaignConfig config;
  if (!j.contains("targets") || !j.at("targets").is_array()) throw ParseError("config lacks a target list");
  std::set<std::string> seen;
  for (const auto& t : j.at("targets")) {
    if (!t.is_object()) throw ParseError("target must be an object");
    CampaignTarget target;
    if (t.contains("spec")) {
      target.spec = spec_from_json(t.at("spec"));
    } else {
      if (!t.contains("family") || !t.contains("size") || !t.at("size").is_number_integer()) {
        throw ParseError("target needs family and size, or a spec");
      }
      const Family f = parse_family(t.at("family").get<std::string>());
      const int n = t.at("size").get<int>();
      check_size(f, n);
      target.spec = AlgebraSpec::family_member(f, n);
    }
    target.name = t.contains("name") ? t.at("name").get<std::string>() : label(target.spec);
    target.exploratory = t.value("exploratory", false);
    if (!seen.insert(target.name).second) throw ParseError("duplicate target name '" + target.name + "'");
    config.targets.push_back(std::move(target));
  }
  if (j.contains("checks")) {
    const Json& c = j.at("checks");
    if (c.is_string()) {
      config.checks = Checks::parse(c.get<std::string>());
    } else if (c.is_array()) {
      std::string joined;
      for (const auto& name : c) joined += (joined.empty() ? "" : ",") + name.get<std::string>();
      config.checks = Checks::parse(joined);
    } else {
      throw ParseError("checks must be a string or a list");
    }
  }
  if (j.contains("seed")) {
    const Json& s = j.at("seed");
    if (!s.is_number_unsigned()) throw ParseError("seed must be a non-negative integer");
    config.seed = s.get<std::uint64_t>();
  }
  auto positive = [&](const char* key, int& field) {
    if (!j.contains(key)) return;
    if (!j.at(key).is_number_integer() || j.at(key).get<long long>() < 0 || j.at(key).get<long long>() > 1000000) {
      throw ParseError(std::string(key) + " must be a non-negative integer");
    }
    field = j.at(key).get<int>();
  };
  positive("max_rounds", config.max_rounds);
  positive("twolocal_samples", config.twolocal_samples);
  positive("tower_pairs", config.tower_pairs);
  positive("tower_maps", config.tower_maps);
  positive("evidence_points", config.evidence_points);
  if (config.max_rounds < 1) throw ParseError("max_rounds must be at least 1");
  if (j.contains("out")) config.out = j.at("out").get<std::string>();
  return config;
}

Json to_json(const CampaignConfig& config) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  Json targets = Json::array();
  for (const auto& t : config.targets) {
    targets.push_back({{"name", t.name}, {"spec", to_json(t.spec)}, {"exploratory", t.exploratory}});
  }
  j["targets"] = std::move(targets);
  j["checks"] = config.checks.names();
  j["seed"] = config.seed;
  j["max_rounds"] = config.max_rounds;
  j["twolocal_samples"] = config.twolocal_samples;
  j["tower_pairs"] = config.tower_pairs;
  j["tower_maps"] = config.tower_maps;
  j["evidence_points"] = config.evidence_points;
  if (!config.out.empty()) j["out"] = config.out;
  return j;
}

CampaignConfig default_config(std::uint64_t seed) {
  CampaignConfig config;
  config.targets = parse_family_ranges("sl:2..5,o:2..4,sp:2..3");
  config.seed = seed;
  return config;
}

CampaignResult run_campaign(const CampaignConfig& config) {
  if (config.targets.empty()) throw UsageError("campaign has no targets");
  return Runner(config).run();
}

Json strip_timings(Json report) {
  if (report.is_object()) report.erase("timings");
  return report;
}

std::string dump_report(const Json& report) { return report.dump(1) + "\n"; }

Json info(const AlgebraSpec& spec) {
  const LieAlgebra g = LieAlgebra::build(spec);
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["label"] = label(spec);
  out["spec"] = to_json(spec);
  out["dim"] = g.dim();
  out["checksum"] = structure_checksum(g.constants());
  if (g.is_matrix_family()) {
    Json basis = Json::array();
    for (const auto& b : g.basis()) basis.push_back(to_string(b));
    out["basis"] = std::move(basis);
  }
  return out;
}

}  // namespace lielab
