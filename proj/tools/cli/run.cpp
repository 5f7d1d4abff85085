#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "golden.hpp"
#include "json.hpp"
#include "run_spec.hpp"
#include "steer/direction_io.hpp"
#include "steer/error.hpp"
#include "steer/presets.hpp"
#include "steer/scan.hpp"

namespace steer::cli {

namespace {

using nlohmann::json;

StateFamily family_of(const RunSpec& spec) {
  return spec.state == StateKind::Werner ? StateFamily::werner()
                                         : StateFamily::generalized_werner(spec.theta);
}

std::string human(double value) {
  std::ostringstream s;
  s << std::setprecision(6) << value;
  return s.str();
}

std::string signs_text(const SignAssignment& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += s[i] > 0 ? '+' : '-';
  }
  return out;
}

json axes_json(const std::vector<UnitVector3>& axes) {
  json rows = json::array();
  for (const auto& a : axes) rows.push_back({a.x(), a.y(), a.z()});
  return rows;
}

json state_json(const RunSpec& spec) {
  json s;
  s["kind"] = spec.state == StateKind::Werner ? "werner" : "generalized-werner";
  if (spec.state == StateKind::GeneralizedWerner) s["theta"] = spec.theta;
  return s;
}

SteeringFunctional functional_for(const RunSpec& spec, const DirectionSet& b) {
  const int n = spec.n > 0 ? spec.n : static_cast<int>(b.size());
  if (static_cast<std::size_t>(n) != b.size()) {
    throw DomainError("--n " + std::to_string(n) + " does not match " +
                      std::to_string(b.size()) + " directions");
  }
  return SteeringFunctional(spec.family, n);
}

DirectionSet directions_for(const RunSpec& spec, std::ostream& err) {
  if (spec.directions.empty()) throw DomainError("--dirs is required");
  auto b = resolve_directions(spec.directions);
  if (b.is_degenerate())
    err << "warning: direction set contains parallel or antipodal axes\n";
  return b;
}

// Writes to --out when given, else to `out`.
class Sink {
 public:
  Sink(const RunSpec& spec, std::ostream& out) : out_(&out) {
    if (!spec.out_path.empty()) {
      file_.open(spec.out_path);
      if (!file_) throw ValidationError("cannot write " + spec.out_path);
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

int cmd_bound(const RunSpec& spec, std::ostream& out, std::ostream& err) {
  const auto b = directions_for(spec, err);
  const auto f = functional_for(spec, b);
  const auto bound = lhs_bound(f, b);
  Sink sink(spec, out);
  if (spec.format == OutputFormat::Json) {
    json doc = {{"command", "bound"}, {"family", to_string(f.family())},
                {"n", f.n()}, {"C", bound.value}, {"argmax", bound.argmax.signs()}};
    sink.stream() << doc.dump(2) << '\n';
  } else {
    sink.stream() << "C = " << human(bound.value) << '\n'
                  << "argmax = " << signs_text(bound.argmax) << '\n';
  }
  return kOk;
}

int cmd_quantum(const RunSpec& spec, std::ostream& out, std::ostream& err) {
  const auto b = directions_for(spec, err);
  const auto f = functional_for(spec, b);
  const auto q = quantum_value(f, b, family_of(spec).at(spec.noise), spec.strategy);
  Sink sink(spec, out);
  if (spec.format == OutputFormat::Json) {
    json doc = {{"command", "quantum"}, {"family", to_string(f.family())},
                {"n", f.n()}, {"state", state_json(spec)}, {"noise", spec.noise},
                {"strategy", to_string(spec.strategy)}, {"Q", q.value},
                {"alice_axes", axes_json(q.alice_axes)}};
    sink.stream() << doc.dump(2) << '\n';
  } else {
    sink.stream() << "Q = " << human(q.value) << "  (noise V = " << human(spec.noise)
                  << ")\n";
  }
  return kOk;
}

json report_json(const SteeringFunctional& f, const RunSpec& spec,
                 const EvalReport& r) {
  return {{"family", to_string(f.family())}, {"n", f.n()},
          {"state", state_json(spec)}, {"strategy", to_string(spec.strategy)},
          {"C", r.lhs_bound}, {"Q", r.quantum_value}, {"V", r.visibility},
          {"argmax", r.argmax_signs.signs()}, {"alice_axes", axes_json(r.alice_axes)}};
}

void print_report(std::ostream& os, const EvalReport& r) {
  os << "C = " << human(r.lhs_bound) << "\nQ = " << human(r.quantum_value)
     << "\nV = " << human(r.visibility) << "\nargmax = " << signs_text(r.argmax_signs)
     << '\n';
}

int cmd_visibility(const RunSpec& spec, std::ostream& out, std::ostream& err) {
  const auto b = directions_for(spec, err);
  const auto f = functional_for(spec, b);
  const auto r = evaluate(f, b, family_of(spec), spec.strategy);
  Sink sink(spec, out);
  if (spec.format == OutputFormat::Json) {
    json doc = report_json(f, spec, r);
    doc["command"] = "visibility";
    sink.stream() << doc.dump(2) << '\n';
  } else {
    print_report(sink.stream(), r);
  }
  return kOk;
}

int cmd_optimize(const RunSpec& spec, std::ostream& out, std::ostream& err) {
  OptimizerResult result = [&] {
    if (spec.polish) {
      const auto b = directions_for(spec, err);
      return polish_directions(functional_for(spec, b), family_of(spec), b,
                               spec.optimizer);
    }
    if (spec.n < 2) throw DomainError("optimize needs --n");
    return optimize_directions(SteeringFunctional(spec.family, spec.n),
                               family_of(spec), spec.optimizer);
  }();
  const SteeringFunctional f(spec.family, static_cast<int>(result.best.size()));
  Sink sink(spec, out);
  if (spec.format == OutputFormat::Human) {
    print_report(sink.stream(), result.report);
    sink.stream() << "restarts within 1e-6 of best: " << result.restarts_within_tol
                  << '/' << result.trace.size() << "\ndirections:\n";
    for (const auto& d : result.best)
      sink.stream() << "  (" << human(d.x()) << ", " << human(d.y()) << ", "
                    << human(d.z()) << ")\n";
  } else {
    json doc = json::parse(direction_set_to_json(result.best));
    doc["report"] = report_json(f, spec, result.report);
    doc["restarts_within_tol"] = result.restarts_within_tol;
    doc["seed"] = spec.optimizer.seed;
    sink.stream() << doc.dump(2) << '\n';
  }
  return kOk;
}

int cmd_scan(const RunSpec& spec, std::ostream& out, std::ostream& err) {
  const auto b = directions_for(spec, err);
  const auto f = functional_for(spec, b);
  const auto grid = uniform_theta_grid(spec.grid_points);

  std::optional<DirectionSet> companion;
  if (!spec.compare_directions.empty()) {
    companion = resolve_directions(spec.compare_directions);
  } else if (f.family() == Family::Chained) {
    try {
      companion = presets::platonic(f.n());
    } catch (const DomainError&) {
    }
  }
  ScanResult scan = !companion ? scan_theta(f, b, grid, spec.strategy)
                    : f.family() == Family::Linear
                        ? scan_compare(f.n(), b, *companion, grid, spec.strategy)
                        : scan_compare(f.n(), *companion, b, grid, spec.strategy);

  Sink sink(spec, out);
  if (spec.format == OutputFormat::Human) {
    sink.stream() << "scan " << scan.grid_spec << "; linear: "
                  << (scan.linear_label.empty() ? "-" : scan.linear_label)
                  << ", chained: "
                  << (scan.chained_label.empty() ? "-" : scan.chained_label) << '\n';
    try {
      const auto t = threshold_angles(f, b, spec.strategy);
      sink.stream() << "V <= 1 for theta in [" << human(t.lo) << ", " << human(t.hi)
                    << "]\n";
    } catch (const NoRootError& e) {
      sink.stream() << "no violation: " << e.what() << '\n';
    }
  } else if (spec.format == OutputFormat::Json) {
    json rows = json::array();
    for (const auto& r : scan.rows) {
      auto num = [](double v) { return std::isfinite(v) ? json(v) : json(nullptr); };
      rows.push_back({{"theta", r.theta}, {"v_linear", num(r.v_linear)},
                      {"v_chained", num(r.v_chained)}});
    }
    json doc = {{"n", scan.n}, {"linear", scan.linear_label},
                {"chained", scan.chained_label}, {"grid", scan.grid_spec},
                {"rows", rows}};
    sink.stream() << doc.dump(2) << '\n';
  } else {
    write_scan_csv(sink.stream(), scan);
  }
  return kOk;
}

int cmd_verify(const RunSpec& spec, std::ostream& out) {
  GoldenOptions options;
  options.include_optimizer = !spec.skip_optimizer;
  const auto checks = run_golden_suite(options);
  int failures = 0;
  out << std::left << std::setw(48) << "check" << std::setw(16) << "expected"
      << std::setw(16) << "observed" << std::setw(10) << "tol" << "result\n";
  for (const auto& c : checks) {
    if (!c.pass) ++failures;
    out << std::setw(48) << c.name << std::setw(16) << human(c.expected)
        << std::setw(16) << human(c.observed) << std::setw(10) << human(c.tolerance)
        << (c.pass ? "PASS" : "FAIL") << (c.one_sided ? " (<=)" : "") << '\n';
  }
  out << checks.size() - failures << '/' << checks.size() << " checks passed\n";
  if (!spec.report_path.empty()) {
    std::ofstream file(spec.report_path);
    if (!file) throw ValidationError("cannot write " + spec.report_path);
    file << golden_report_json(checks) << '\n';
  }
  return failures == 0 ? kOk : kVerifyFailed;
}

}  // namespace

DirectionSet resolve_directions(const std::string& source) {
  if (source.rfind("preset:", 0) == 0) return presets::by_name(source.substr(7));
  std::error_code ec;
  if (std::filesystem::is_regular_file(source, ec)) return load_direction_set(source);
  if (source.find(',') != std::string::npos) return parse_inline_directions(source);
  throw ValidationError("cannot resolve directions '" + source +
                        "' (expected preset:NAME, a JSON file or x,y,z;...)");
}

int run(const RunSpec& spec, std::ostream& out, std::ostream& err) {
  try {
    switch (spec.command) {
      case Command::Bound: return cmd_bound(spec, out, err);
      case Command::Quantum: return cmd_quantum(spec, out, err);
      case Command::Visibility: return cmd_visibility(spec, out, err);
      case Command::Optimize: return cmd_optimize(spec, out, err);
      case Command::Scan: return cmd_scan(spec, out, err);
      case Command::VerifyPaper: return cmd_verify(spec, out);
    }
  } catch (const DegenerateError& e) {
    err << "error: " << e.what() << '\n';
    return kComputationError;
  } catch (const NoRootError& e) {
    err << "error: " << e.what() << '\n';
    return kComputationError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kComputationError;
  }
  return kValidationError;
}

std::optional<RunSpec> parse_args(int argc, const char* const* argv,
                                  std::ostream& out, std::ostream& err,
                                  int& exit_code) {
  CLI::App app{"Steering inequality bounds, quantum values and visibilities"};
  app.require_subcommand(1);
  RunSpec spec;
  std::string family = "chained";
  std::string state = "werner";
  std::string strategy = "general";
  std::string format;

  auto add_common = [&](CLI::App* sub, bool needs_dirs) {
    sub->add_option("--family", family, "linear | chained")->capture_default_str();
    sub->add_option("--n", spec.n, "number of settings (default: size of --dirs)");
    auto* dirs = sub->add_option("--dirs", spec.directions,
                                 "preset:NAME, JSON file, or inline x,y,z;x,y,z");
    if (needs_dirs) dirs->required();
    sub->add_option("--state", state, "werner | gwerner")->capture_default_str();
    sub->add_option("--theta", spec.theta, "generalized Werner angle in [0, pi/2]");
    sub->add_option("--strategy", strategy, "general | projective")->capture_default_str();
    sub->add_option("--format", format, "human | json | csv");
    sub->add_option("--out", spec.out_path, "write output to this file");
  };

  auto* bound = app.add_subcommand("bound", "LHS bound C");
  add_common(bound, true);
  auto* quantum = app.add_subcommand("quantum", "quantum value Q at noise V");
  add_common(quantum, true);
  quantum->add_option("--V", spec.noise, "noise parameter in [0, 1]");
  auto* visibility = app.add_subcommand("visibility", "C, Q and V = C/Q");
  add_common(visibility, true);
  auto* optimize = app.add_subcommand("optimize", "minimize V over Bob's axes");
  add_common(optimize, false);
  optimize->add_flag("--polish", spec.polish, "local refinement starting at --dirs");
  optimize->add_option("--restarts", spec.optimizer.restarts);
  optimize->add_option("--seed", spec.optimizer.seed);
  optimize->add_option("--max-iters", spec.optimizer.max_iters);
  optimize->add_option("--tol", spec.optimizer.objective_tol);
  optimize->add_option("--simplex-scale", spec.optimizer.simplex_scale);
  optimize->add_option("--threads", spec.optimizer.threads);
  optimize->add_flag("!--no-gauge", spec.optimizer.gauge_fix, "search all 2n angles");
  auto* scan = app.add_subcommand("scan", "visibility over the generalized Werner angle");
  add_common(scan, true);
  scan->add_option("--grid", spec.grid_points, "uniform grid points on [0, pi/2]")
      ->capture_default_str();
  scan->add_option("--compare-dirs", spec.compare_directions,
                   "direction set for the other family's column");
  auto* verify = app.add_subcommand("verify-paper", "recompute every published value");
  verify->add_option("--report", spec.report_path, "write JSON results table");
  verify->add_flag("--skip-optimizer", spec.skip_optimizer, "skip optimizer checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    exit_code = app.exit(e, out, err) == 0 ? kOk : kValidationError;
    return std::nullopt;
  }

  try {
    spec.family = parse_family(family);
    spec.strategy = parse_strategy(strategy);
    if (state == "werner") {
      spec.state = StateKind::Werner;
    } else if (state == "gwerner" || state == "generalized-werner") {
      spec.state = StateKind::GeneralizedWerner;
      StateFamily::generalized_werner(spec.theta);
    } else {
      throw DomainError("unknown state '" + state + "' (expected werner|gwerner)");
    }
    if (bound->parsed()) spec.command = Command::Bound;
    if (quantum->parsed()) spec.command = Command::Quantum;
    if (visibility->parsed()) spec.command = Command::Visibility;
    if (optimize->parsed()) spec.command = Command::Optimize;
    if (scan->parsed()) spec.command = Command::Scan;
    if (verify->parsed()) spec.command = Command::VerifyPaper;

    if (format.empty()) {
      spec.format = spec.command == Command::Scan ? OutputFormat::Csv : OutputFormat::Human;
    } else if (format == "human") {
      spec.format = OutputFormat::Human;
    } else if (format == "json") {
      spec.format = OutputFormat::Json;
    } else if (format == "csv" && spec.command == Command::Scan) {
      spec.format = OutputFormat::Csv;
    } else {
      throw DomainError("unsupported --format '" + format + "'");
    }
    if (spec.command == Command::Optimize) spec.optimizer.validate();
    if (spec.command == Command::Optimize && spec.polish && spec.directions.empty())
      throw DomainError("--polish needs --dirs");
    if (!spec.directions.empty() && spec.directions.rfind("preset:", 0) == 0)
      presets::by_name(spec.directions.substr(7));  // unknown preset fails early
    if (!spec.compare_directions.empty() &&
        spec.compare_directions.rfind("preset:", 0) == 0)
      presets::by_name(spec.compare_directions.substr(7));
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    exit_code = kValidationError;
    return std::nullopt;
  }
  exit_code = kOk;
  return spec;
}

}  // namespace steer::cli
