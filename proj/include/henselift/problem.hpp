#pragma once

// Problem files, reports and table rendering for the command-line driver.
//
// A problem file is a JSON object:
//
//   {
//     "p": 2,
//     "f": ["8", "-2", "1", "1"],            // low to high, leading 1
//     "factors": [["0", "1"], ["2", "1"], ["7", "1"]],
//     "s": 3,
//     "target": 514,                          // optional
//     "mode": "auto",                         // optional: auto|general|special
//     "compare": false                        // optional
//   }
//
// Coefficients are decimal strings (JSON integers are accepted too; floats
// are rejected so big values never pass through a double).

#include <henselift/lift.hpp>

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace henselift {

struct ProblemSpec {
  std::uint64_t p = 0;
  IntPoly f;
  std::vector<IntPoly> factors;
  std::uint64_t s = 0;
  std::optional<std::uint64_t> target;
  LiftMode mode = LiftMode::Auto;
  bool compare = false;
};

/// Throws Errc::InvalidArgument with a message starting with the field
/// path, e.g. "factors[1][0]: expected a decimal integer string".
ProblemSpec parse_problem(const nlohmann::json& doc);
ProblemSpec parse_problem_text(const std::string& text);
ProblemSpec load_problem(const std::string& path);

/// Builds and validates the factor system. Structural problems are
/// reported against field paths; lifting-hypothesis failures keep their
/// own error codes.
FactorSystem make_system(const ProblemSpec& spec);

nlohmann::json coefficients_json(const MonicPoly& g);
nlohmann::json factor_json(const MonicPoly& g, std::uint64_t n, const PadicContext& ctx);

nlohmann::json profile_json(const FactorSystem& sys);
nlohmann::json report_json(const FactorSystem& sys, const LiftReport& report);
nlohmann::json comparison_json(const StrategyComparison& cmp);

/// step / precision / defect table, one row per step.
std::string render_table(const LiftReport& report);
std::string render_profile(const FactorSystem& sys);
std::string render_comparison(const StrategyComparison& cmp);

/// Final factors of a report document, parsed back from their canonical
/// decimal renderings, together with the modulus exponent they are
/// reduced to.
struct ReportFactors {
  std::uint64_t p = 0;
  std::uint64_t target = 0;
  std::vector<MonicPoly> factors;
};
ReportFactors parse_report_factors(const nlohmann::json& report);

struct CheckResult {
  std::string name;
  bool passed = false;
  bool skipped = false;
  std::string detail;
};

/// Identity checks on the factor tuple of a problem: the pairwise resultant
/// product, the discriminant product formula, congruence of resultants and
/// discriminants under p^r perturbations (`cases` random instances from
/// `seed`), the discriminant valuation bound, and in special mode the
/// column-divisibility and coefficient-valuation bounds.
std::vector<CheckResult> run_identity_checks(const FactorSystem& sys, std::uint64_t seed,
                                             std::size_t cases = 100);

}  // namespace henselift
