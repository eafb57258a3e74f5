// lvpert: compare perturbative approximants of the prey-predator model
// against an adaptive reference integration.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lvpert/diagnostics.hpp"
#include "lvpert/errors.hpp"
#include "lvpert/methods.hpp"
#include "lvpert/presets.hpp"
#include "lvpert/report_io.hpp"
#include "lvpert/verification.hpp"

namespace {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kArgError = 2, kNumericError = 3, kIoError = 4 };

struct RunArgs {
  std::string preset;
  std::optional<double> a, b, c, d, x0, y0;
  std::string method = "taylor";
  std::optional<int> order;
  std::optional<double> t_end;
  std::size_t points = 2001;
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double delta = lvpert::kDefaultDivergenceDelta;
  std::vector<std::string> formats;
  std::string out = ".";
};

struct VerifyArgs {
  std::vector<int> orders{4, 8, 12, 16, 20};
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

lvpert::OutputFormats parse_formats(const std::vector<std::string>& names) {
  if (names.empty()) return {};
  lvpert::OutputFormats f{false, false, false};
  for (const std::string& n : names) {
    if (n == "csv") {
      f.csv = true;
    } else if (n == "json") {
      f.json = true;
    } else if (n == "svg") {
      f.svg = true;
    } else if (n == "all") {
      f = {true, true, true};
    } else {
      throw UsageError("--format: unknown format '" + n + "' (csv|json|svg|all)");
    }
  }
  return f;
}

int do_run(const RunArgs& args) {
  const int custom_count = args.a.has_value() + args.b.has_value() + args.c.has_value() + args.d.has_value() +
                           args.x0.has_value() + args.y0.has_value();
  if (!args.preset.empty() && custom_count > 0) {
    throw UsageError("--preset cannot be combined with --a/--b/--c/--d/--x0/--y0");
  }
  if (args.preset.empty() && custom_count != 6) {
    throw UsageError("either --preset or all of --a --b --c --d --x0 --y0 are required");
  }

  const auto method = lvpert::parse_method(args.method);
  if (!method) throw UsageError("--method: expected taylor|adomian|hpm|vim, got '" + args.method + "'");
  const lvpert::OutputFormats formats = parse_formats(args.formats);

  std::string name = "custom";
  std::optional<lvpert::InitialValueProblem> ivp;
  int order = lvpert::kDefaultSeriesOrder;
  double t_end = 10.0;
  if (!args.preset.empty()) {
    const lvpert::CasePreset& cp = lvpert::preset(args.preset);
    name = cp.name;
    order = cp.default_order;
    t_end = cp.default_t_end;
    ivp.emplace(cp.params, cp.initial, args.t_end.value_or(t_end));
  } else {
    lvpert::ModelParams params = [&] {
      try {
        return lvpert::ModelParams::make(*args.a, *args.b, *args.c, *args.d);
      } catch (const lvpert::DomainError& e) {
        throw UsageError(std::string("--a/--b/--c/--d: ") + e.what());
      }
    }();
    ivp.emplace(params, lvpert::PopulationState{*args.x0, *args.y0}, args.t_end.value_or(t_end));
  }
  if (args.order) order = *args.order;

  lvpert::ComparisonSettings settings;
  settings.points = args.points;
  settings.integrator.rel_tol = args.rel_tol;
  settings.integrator.abs_tol = args.abs_tol;
  settings.delta = args.delta;
  settings.integrator.validate();

  const lvpert::ComparisonRun run = lvpert::run_comparison(*ivp, *method, order, settings);
  const std::string stem = name + "_" + args.method + "_N" + std::to_string(order);
  for (const auto& path : lvpert::write_outputs(args.out, stem, formats, run, ivp->params(), name)) {
    std::cout << path.string() << '\n';
  }
  return kOk;
}

int do_verify(const VerifyArgs& args) {
  lvpert::VerifyOptions opts;
  opts.orders = args.orders;
  const auto results = lvpert::run_verification(opts);
  std::size_t width = 0;
  for (const auto& r : results) width = std::max(width, r.name.size());
  for (const auto& r : results) {
    std::printf("%-4s  %-*s  %s\n", r.passed ? "PASS" : "FAIL", static_cast<int>(width), r.name.c_str(),
                r.detail.c_str());
  }
  if (lvpert::all_passed(results)) {
    std::printf("all %zu checks passed\n", results.size());
    return kOk;
  }
  for (const auto& r : results) {
    if (!r.passed) std::fprintf(stderr, "verification failed: %s\n", r.name.c_str());
  }
  return kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Perturbation approximants of the Lotka-Volterra model versus a reference integration"};
  app.require_subcommand(1);

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "Compare one method against the reference and write CSV/JSON/SVG");
  auto* preset_opt = run->add_option("--preset", run_args.preset, "case-I, case-V or decoupled");
  const std::vector<std::pair<const char*, std::optional<double>*>> custom{
      {"--a", &run_args.a}, {"--b", &run_args.b},   {"--c", &run_args.c},
      {"--d", &run_args.d}, {"--x0", &run_args.x0}, {"--y0", &run_args.y0}};
  for (const auto& [flag, target] : custom) {
    run->add_option(flag, *target, "custom model value")->excludes(preset_opt);
  }
  run->add_option("--method", run_args.method, "taylor|adomian|hpm|vim")->capture_default_str();
  run->add_option("--order", run_args.order, "series order / VIM iterations (>= 0)")->check(CLI::NonNegativeNumber);
  run->add_option("--t-end", run_args.t_end, "time horizon")->check(CLI::PositiveNumber);
  run->add_option("--points", run_args.points, "output grid size (>= 2)")
      ->check(CLI::Range(std::size_t{2}, std::size_t{10000000}))
      ->capture_default_str();
  run->add_option("--rel-tol", run_args.rel_tol, "reference relative tolerance")->capture_default_str();
  run->add_option("--abs-tol", run_args.abs_tol, "reference absolute tolerance")->capture_default_str();
  run->add_option("--delta", run_args.delta, "divergence threshold")->check(CLI::PositiveNumber)->capture_default_str();
  run->add_option("--format", run_args.formats, "csv|json|svg|all (repeatable; default csv and json)");
  run->add_option("--out", run_args.out, "output directory")->capture_default_str();

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run the failure and equivalence checks on the built-in presets");
  verify->add_option("--orders", verify_args.orders, "orders for the divergence sweep")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kArgError;
  }

  try {
    if (*run) return do_run(run_args);
    return do_verify(verify_args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kArgError;
  } catch (const lvpert::ArgumentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kArgError;
  } catch (const lvpert::LookupError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kArgError;
  } catch (const lvpert::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kIoError;
  } catch (const lvpert::Error& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kNumericError;
  }
}
