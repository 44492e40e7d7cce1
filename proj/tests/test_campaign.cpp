#include "doctest.h"

#include "lielab/campaign.hpp"
#include "lielab/error.hpp"

using namespace lielab;

namespace {

AlgebraSpec heisenberg_spec() {
  StructureConstants c(3);
  c.set(0, 1, 2, Rational(1));
  c.set(1, 0, 2, Rational(-1));
  return AlgebraSpec::custom(c);
}

CampaignConfig small_config(std::uint64_t seed) {
  CampaignConfig config;
  config.targets = parse_family_ranges("sl:2..3,o:2,sp:1..2");
  config.targets.push_back({heisenberg_spec(), "heisenberg", true});
  config.seed = seed;
  config.twolocal_samples = 2;
  config.tower_pairs = 40;
  config.tower_maps = 4;
  return config;
}

const CampaignResult& small_run() {
  static const CampaignResult r = run_campaign(small_config(17));
  return r;
}

}  // namespace

TEST_CASE("family ranges and check selectors") {
  const auto targets = parse_family_ranges("sl:2..4,sp:3");
  REQUIRE(targets.size() == 4);
  CHECK(targets[0].name == "sl2");
  CHECK(targets[3].name == "sp3");
  CHECK_THROWS_AS(parse_family_ranges("sl:1..3"), ParseError);
  CHECK_THROWS_AS(parse_family_ranges("gl:2..3"), ParseError);
  CHECK_THROWS_AS(parse_family_ranges("sl:3..2"), ParseError);
  CHECK_THROWS_AS(parse_family_ranges("sl:x"), ParseError);
  CHECK_THROWS_AS(parse_family_ranges(""), ParseError);
  CHECK(Checks::parse("all") == Checks::all());
  const Checks c = Checks::parse("forms,roots");
  CHECK(c.forms);
  CHECK(c.roots);
  CHECK_FALSE(c.locder);
  CHECK(c.names() == std::vector<std::string>{"forms", "roots"});
  CHECK_THROWS_AS(Checks::parse("forms,bogus"), ParseError);
}

TEST_CASE("configs round-trip and reject malformed input") {
  const CampaignConfig config = small_config(5);
  const CampaignConfig back = config_from_json(to_json(config));
  CHECK(to_json(back) == to_json(config));
  CHECK(back.targets.back().exploratory);

  CHECK_THROWS_AS(config_from_json(Json::parse(R"({"targets":[]})")), ParseError);
  CHECK_THROWS_AS(config_from_json(Json::parse(R"({"schema_version":1})")), ParseError);
  CHECK_THROWS_AS(config_from_json(Json::parse(R"({"schema_version":1,"targets":[],"sead":3})")), ParseError);
  CHECK_THROWS_AS(config_from_json(Json::parse(R"({"schema_version":1,"targets":[{"family":"sl","size":9}]})")),
                  ParseError);
  CHECK_THROWS_AS(config_from_json(Json::parse(R"({"schema_version":1,"targets":[],"seed":-1})")), ParseError);
  const CampaignConfig minimal =
      config_from_json(Json::parse(R"({"schema_version":1,"targets":[{"family":"o","size":3}],"seed":18446744073709551615})"));
  CHECK(minimal.seed == 18446744073709551615ULL);
  CHECK(minimal.targets[0].name == "o3");
}

TEST_CASE("campaign on small targets passes and records its seed") {
  const CampaignResult& r = small_run();
  CHECK(r.passed);
  CHECK(r.report["config"]["seed"] == 17);
  CHECK(r.report["towers"].size() == 2);  // sl2<sl3 and sp1<sp2; o2 has no neighbour
  for (const auto& t : r.report["targets"]) {
    CAPTURE(t["name"].get<std::string>());
    if (t["exploratory"].get<bool>()) {
      CHECK(t["checks"]["locder"]["verdict"] == "Inconclusive");
      CHECK(t["checks"]["locder"]["excess_dim"] == 1);
      CHECK(t["checks"]["locder"]["candidates"].size() == 1);
    } else {
      CHECK(t["passed"].get<bool>());
      CHECK(t["checks"]["locder"]["verdict"] == "ProvenEqual");
    }
  }
}

TEST_CASE("the audit accepts emitted reports") {
  const AuditResult a = check_report(small_run().report);
  CHECK(a.passed);
  CHECK(a.first_failure.empty());
  CHECK(a.claims_checked > 500);
  // Round trip through text as the CLI does.
  CHECK(check_report_text(dump_report(small_run().report)).passed);
}

TEST_CASE("the audit catches a single corrupted coefficient") {
  SUBCASE("locder expansion") {
    Json report = small_run().report;
    report["targets"][1]["checks"]["locder"]["expansions"][2][0] = "7/3";
    const AuditResult a = check_report(report);
    CHECK_FALSE(a.passed);
    CHECK(a.first_failure == "sl3: bound basis vector 2 expands over the derivation basis");
  }
  SUBCASE("structure constant") {
    Json report = small_run().report;
    report["targets"][0]["structure_constants"][0][3] = "5";
    const AuditResult a = check_report(report);
    CHECK_FALSE(a.passed);
    CHECK(a.first_failure.rfind("sl2: ", 0) == 0);
  }
  SUBCASE("Gram inverse entry") {
    Json report = small_run().report;
    report["targets"][0]["checks"]["forms"]["gram_inverse"][0][2] = "1/5";
    const AuditResult a = check_report(report);
    CHECK_FALSE(a.passed);
    CHECK(a.first_failure == "sl2: Gram matrix times its inverse is the identity");
  }
  SUBCASE("refutation certificate") {
    Json report = small_run().report;
    report["targets"][0]["checks"]["twolocal"]["identity"]["refutation"]["certificate"][1] = "2";
    CHECK_FALSE(check_report(report).passed);
  }
  SUBCASE("tower sample") {
    Json report = small_run().report;
    report["towers"][0]["projection_ok"] = false;
    CHECK_FALSE(check_report(report).passed);
  }
  SUBCASE("overall verdict") {
    Json report = small_run().report;
    report["passed"] = false;
    const AuditResult a = check_report(report);
    CHECK_FALSE(a.passed);
    CHECK(a.first_failure == "overall verdict matches the per-target results");
  }
}

TEST_CASE("empty reports pass with a warning") {
  for (const char* text : {"", "  \n", "{}", R"({"schema_version":1,"targets":[],"towers":[],"passed":true})"}) {
    const AuditResult a = check_report_text(text);
    CHECK(a.passed);
    CHECK(a.warnings.size() == 1);
  }
  CHECK_THROWS_AS(check_report_text("{not json"), ParseError);
  CHECK_THROWS_AS(check_report(Json::parse(R"({"schema_version":1,"targets":[{"name":"x"}]})")), ParseError);
}

TEST_CASE("identical configs give identical reports apart from timings") {
  const CampaignResult again = run_campaign(small_config(17));
  CHECK(dump_report(strip_timings(again.report)) == dump_report(strip_timings(small_run().report)));
  CHECK(small_run().report.contains("timings"));
}

TEST_CASE("verdicts do not depend on the seed") {
  const CampaignResult other = run_campaign(small_config(4242));
  const auto& a = small_run().report["targets"];
  const auto& b = other.report["targets"];
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k]["status"] == b[k]["status"]);
    CHECK(a[k]["checks"]["locder"]["verdict"] == b[k]["checks"]["locder"]["verdict"]);
    // Proven bounds are canonical bases of Der, so they agree exactly.
    if (a[k]["checks"]["locder"]["verdict"] == "ProvenEqual") {
      CHECK(a[k]["checks"]["locder"]["bound_basis"] == b[k]["checks"]["locder"]["bound_basis"]);
    }
  }
  CHECK(other.passed == small_run().passed);
  CHECK(check_report(other.report).passed);
}

TEST_CASE("selected checks only") {
  CampaignConfig config;
  config.targets = parse_family_ranges("sl:2");
  config.checks = Checks::parse("forms");
  const CampaignResult r = run_campaign(config);
  CHECK(r.passed);
  const Json& checks = r.report["targets"][0]["checks"];
  CHECK(checks.contains("forms"));
  CHECK_FALSE(checks.contains("locder"));
  CHECK(check_report(r.report).passed);
}

TEST_CASE("info fragments") {
  const Json sl3 = info(AlgebraSpec::sl(3));
  CHECK(sl3["dim"] == 8);
  CHECK(sl3["basis"].size() == 8);
  CHECK(info(AlgebraSpec::o(2))["dim"] == 6);
  CHECK(info(heisenberg_spec())["dim"] == 3);
  CHECK_THROWS_AS(parse_family("sl3"), ParseError);
}
