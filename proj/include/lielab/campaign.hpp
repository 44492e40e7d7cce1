#pragma once

// Verification campaigns and their JSON reports, plus the independent audit
// that re-checks a report by substitution alone.

#include "lielab/serialize.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace lielab {

struct Checks {
  bool derivations = false;
  bool locder = false;
  bool twolocal = false;
  bool forms = false;
  bool tower = false;
  bool roots = false;

  static Checks all() { return {true, true, true, true, true, true}; }
  /// Comma-separated selector names or "all".
  static Checks parse(const std::string& list);
  std::vector<std::string> names() const;
  friend bool operator==(const Checks&, const Checks&) = default;
};

struct CampaignTarget {
  AlgebraSpec spec;
  std::string name;          // defaults to label(spec)
  bool exploratory = false;  // inconclusive results do not fail the campaign
};

struct CampaignConfig {
  std::vector<CampaignTarget> targets;
  Checks checks = Checks::all();
  std::uint64_t seed = 0;
  int max_rounds = 8;
  int twolocal_samples = 3;   // seeded inner maps per target
  int tower_pairs = 1000;     // projection pairs per tower level
  int tower_maps = 100;       // restricted inner maps per tower level
  int evidence_points = 5;    // random points per exploratory candidate
  std::string out;
};

/// Bounds on family sizes accepted by configs and the command line.
int min_size(Family f);
int max_size(Family f);

/// "sl:2..5,o:2..4,sp:2..3"; single sizes ("sl:3") are allowed.
std::vector<CampaignTarget> parse_family_ranges(const std::string& text);

CampaignConfig config_from_json(const Json& j);
Json to_json(const CampaignConfig& config);

/// The default campaign: sl 2..5, o 2..4, sp 2..3, every check.
CampaignConfig default_config(std::uint64_t seed = 0);

struct CampaignResult {
  Json report;
  bool passed = false;
};

/// Runs every selected check on every target in config order. The report is
/// a pure function of the config except for the top-level "timings" object.
CampaignResult run_campaign(const CampaignConfig& config);

/// The report with timing data removed; equal configs give equal dumps.
Json strip_timings(Json report);

/// Report text as written to disk.
std::string dump_report(const Json& report);

/// Dimension, basis listing and structure-constant checksum.
Json info(const AlgebraSpec& spec);

struct AuditResult {
  bool passed = true;
  std::size_t claims_checked = 0;
  std::string first_failure;  // empty when passed
  std::vector<std::string> warnings;
};

/// Re-verifies every claim in a report by direct substitution: no kernels,
/// ranks or eliminations are recomputed. Throws ParseError on a report that
/// does not have the expected shape.
AuditResult check_report(const Json& report);

/// Reads and audits a report file; an empty file passes with a warning.
AuditResult check_report_text(std::string_view text);

}  // namespace lielab
