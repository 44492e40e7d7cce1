// Command-line front end.
//
//   lielab info <family> <n>            dimension, basis and checksum
//   lielab info --spec <file>           same for an algebra spec file
//   lielab verify --config <file>       run a campaign from a config file
//   lielab verify --families sl:2..5,o:2..4,sp:2..3 --checks all --seed 7 --out report.json
//   lielab check <report>               audit a report by substitution
//
// Exit status: 0 verified, 1 refuted or inconclusive, 2 usage or parse error.

#include "lielab/campaign.hpp"
#include "lielab/error.hpp"

#include "CLI11.hpp"

#include <iostream>

namespace {

constexpr int kVerified = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

int cmd_info(const std::string& family, int n, const std::string& spec_path) {
  using namespace lielab;
  AlgebraSpec spec;
  if (!spec_path.empty()) {
    spec = spec_from_json(parse_json_text(read_file(spec_path)));
  } else {
    if (family.empty()) throw UsageError("info needs <family> <n> or --spec <file>");
    const Family f = parse_family(family);
    if (f == Family::custom) throw UsageError("custom algebras need --spec <file>");
    if (n < min_size(f) || n > max_size(f)) {
      throw UsageError(family + " size must be in " + std::to_string(min_size(f)) + ".." + std::to_string(max_size(f)));
    }
    spec = AlgebraSpec::family_member(f, n);
  }
  std::cout << info(spec).dump(1) << "\n";
  return kVerified;
}

struct VerifyArgs {
  std::string config_path;
  std::string families;
  std::string checks = "all";
  std::vector<std::string> exploratory;
  std::optional<std::uint64_t> seed;
  std::optional<int> max_rounds;
  std::optional<int> twolocal_samples;
  std::string out;
};

int cmd_verify(const VerifyArgs& a) {
  using namespace lielab;
  CampaignConfig config;
  if (!a.config_path.empty()) {
    if (!a.families.empty()) throw UsageError("--config and --families are exclusive");
    config = config_from_json(parse_json_text(read_file(a.config_path)));
  } else {
    config.targets = parse_family_ranges(a.families.empty() ? "sl:2..5,o:2..4,sp:2..3" : a.families);
    config.checks = Checks::parse(a.checks);
  }
  for (const auto& path : a.exploratory) {
    CampaignTarget t;
    t.spec = spec_from_json(parse_json_text(read_file(path)));
    t.name = path;
    t.exploratory = true;
    config.targets.push_back(std::move(t));
  }
  if (a.seed) config.seed = *a.seed;
  if (a.max_rounds) config.max_rounds = *a.max_rounds;
  if (a.twolocal_samples) config.twolocal_samples = *a.twolocal_samples;
  if (!a.out.empty()) config.out = a.out;

  const CampaignResult result = run_campaign(config);
  const std::string text = dump_report(result.report);
  if (config.out.empty()) {
    std::cout << text;
  } else {
    write_file(config.out, text);
  }
  for (const auto& t : result.report["targets"]) {
    std::string line = t["name"].get<std::string>() + ": " + t["status"].get<std::string>();
    if (t["checks"].contains("locder")) {
      const auto& l = t["checks"]["locder"];
      line += " (dim Der " + std::to_string(l["bound_dim"].get<long>() - l["excess_dim"].get<long>()) + ", " +
              l["verdict"].get<std::string>();
      if (l["excess_dim"].get<long>() > 0) line += ", excess " + std::to_string(l["excess_dim"].get<long>());
      line += ")";
    }
    std::cerr << line << "\n";
  }
  for (const auto& level : result.report["towers"]) {
    std::cerr << "tower " << level["small"].get<std::string>() << " < " << level["big"].get<std::string>() << ": "
              << (level["passed"].get<bool>() ? "pass" : "fail") << "\n";
  }
  std::cerr << (result.passed ? "campaign passed" : "campaign FAILED") << "\n";
  return result.passed ? kVerified : kFailed;
}

int cmd_check(const std::string& path) {
  using namespace lielab;
  const AuditResult r = check_report_text(read_file(path));
  for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
  if (!r.passed) {
    std::cout << "FAIL: " << r.first_failure << "\n";
    return kFailed;
  }
  std::cout << "PASS (" << r.claims_checked << " claims re-verified)\n";
  return kVerified;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of derivations, local and 2-local derivations on finite Lie algebras"};
  app.require_subcommand(1);

  std::string family, spec_path;
  int n = 0;
  auto* info = app.add_subcommand("info", "Show dimension, basis and structure-constant checksum");
  info->add_option("family", family, "sl, o or sp");
  info->add_option("n", n, "size of the index set");
  info->add_option("--spec", spec_path, "algebra spec file (JSON)");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run a verification campaign and write its report");
  verify->add_option("--config", va.config_path, "campaign config file (JSON)");
  verify->add_option("--families", va.families, "targets, e.g. sl:2..5,o:2..4,sp:2..3");
  verify->add_option("--checks", va.checks, "all, or a list of derivations,locder,twolocal,forms,tower,roots");
  verify->add_option("--exploratory", va.exploratory, "custom algebra spec to explore (repeatable)");
  verify->add_option("--seed", va.seed, "RNG seed");
  verify->add_option("--max-rounds", va.max_rounds, "sampling rounds for the local-derivation bound")
      ->check(CLI::Range(1, 1000));
  verify->add_option("--twolocal-samples", va.twolocal_samples, "seeded inner maps per target")
      ->check(CLI::Range(0, 100000));
  verify->add_option("--out", va.out, "report path (default: stdout)");

  std::string report_path;
  auto* check = app.add_subcommand("check", "Re-verify a report by substitution");
  check->add_option("report", report_path, "report file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*info) return cmd_info(family, n, spec_path);
    if (*verify) return cmd_verify(va);
    return cmd_check(report_path);
  } catch (const lielab::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const lielab::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const lielab::Unsupported& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kUsage;
  } catch (const lielab::AxiomViolation& e) {
    std::cerr << "invalid algebra: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
