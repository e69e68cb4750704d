// henselift: lift an approximate factorization over Z_p from the command line.
//
//   henselift profile --input problem.json [--json]
//   henselift lift    --input problem.json [--target N | --steps N] [--table] [--json] [--report PATH]
//   henselift compare --input problem.json [--json]
//   henselift check   --input problem.json [--seed N] [--cases N] [--json]
//
// Exit status: 0 success, 1 invalid input or violated hypothesis, 2 internal
// invariant violation.

#include <henselift/error.hpp>
#include <henselift/problem.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

using namespace henselift;
using nlohmann::json;

namespace {

struct Options {
  std::string input;
  std::string mode;
  std::optional<std::uint64_t> target;
  std::optional<std::size_t> steps;
  bool table = false;
  bool json = false;
  std::string report_path;
  std::uint64_t seed = 1;
  std::size_t cases = 100;
};

FactorSystem load(const Options& opt, ProblemSpec& spec) {
  spec = load_problem(opt.input);
  if (!opt.mode.empty()) spec.mode = parse_lift_mode(opt.mode);
  if (opt.target) spec.target = opt.target;
  return make_system(spec);
}

int run_profile(const Options& opt) {
  ProblemSpec spec;
  const FactorSystem sys = load(opt, spec);
  if (opt.json)
    std::cout << profile_json(sys).dump() << "\n";
  else
    std::cout << render_profile(sys);
  return 0;
}

int run_lift(const Options& opt) {
  ProblemSpec spec;
  const FactorSystem sys = load(opt, spec);
  LiftReport report;
  if (opt.steps)
    report = lift_steps(sys, *opt.steps);
  else if (spec.target)
    report = lift_to_precision(sys, *spec.target);
  else
    report = lift_steps(sys, 1);

  json doc = report_json(sys, report);
  std::optional<StrategyComparison> cmp;
  if (spec.compare) {
    cmp = compare_strategies(sys);
    doc["comparison"] = comparison_json(*cmp);
  }
  if (!opt.report_path.empty()) {
    std::ofstream out(opt.report_path);
    if (!out) throw Error(Errc::InvalidArgument, "cannot write " + opt.report_path);
    out << doc.dump(2) << "\n";
  }
  if (opt.table || !opt.json) std::cout << render_table(report);
  if (opt.json)
    std::cout << doc.dump() << "\n";
  else if (cmp)
    std::cout << render_comparison(*cmp);
  return 0;
}

int run_compare(const Options& opt) {
  ProblemSpec spec;
  const FactorSystem sys = load(opt, spec);
  const StrategyComparison cmp = compare_strategies(sys);
  if (opt.json)
    std::cout << comparison_json(cmp).dump() << "\n";
  else
    std::cout << render_comparison(cmp);
  return 0;
}

int run_check(const Options& opt) {
  ProblemSpec spec;
  const FactorSystem sys = load(opt, spec);
  const auto results = run_identity_checks(sys, opt.seed, opt.cases);
  bool ok = true;
  json arr = json::array();
  for (const auto& r : results) {
    ok = ok && (r.passed || r.skipped);
    const char* status = r.skipped ? "SKIP" : (r.passed ? "PASS" : "FAIL");
    if (opt.json)
      arr.push_back({{"name", r.name}, {"status", status}, {"detail", r.detail}});
    else
      std::cout << status << "  " << r.name << (r.detail.empty() ? "" : "  (" + r.detail + ")") << "\n";
  }
  if (opt.json) std::cout << arr.dump() << "\n";
  return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hensel lifting of factorizations over the p-adic integers", "henselift"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", opt.input, "Problem file (JSON)")->required();
    sub->add_option("--mode", opt.mode, "auto, general or special")
        ->check(CLI::IsMember({"auto", "general", "special"}));
    sub->add_flag("--json", opt.json, "Machine-readable output");
  };

  auto* profile = app.add_subcommand("profile", "Resultant valuation t, t' and mode detection");
  add_common(profile);
  auto* lift = app.add_subcommand("lift", "Lift the factorization");
  add_common(lift);
  lift->add_option("--target", opt.target, "Target precision exponent");
  lift->add_option("--steps", opt.steps, "Number of lifting steps");
  lift->add_flag("--table", opt.table, "Print the step/precision/defect table");
  lift->add_option("--report", opt.report_path, "Write the JSON report to a file");
  auto* compare = app.add_subcommand("compare", "Compare one 3-factor step with two nested 2-factor steps");
  add_common(compare);
  auto* check = app.add_subcommand("check", "Run resultant and discriminant identity checks");
  add_common(check);
  check->add_option("--seed", opt.seed, "Seed for random perturbation corpora");
  check->add_option("--cases", opt.cases, "Perturbation cases per identity");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return 1;
  }

  try {
    if (*profile) return run_profile(opt);
    if (*lift) return run_lift(opt);
    if (*compare) return run_compare(opt);
    if (*check) return run_check(opt);
  } catch (const Error& e) {
    std::cerr << "henselift: " << e.what() << "\n";
    return e.is_internal() ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "henselift: internal error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
