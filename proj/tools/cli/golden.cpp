#include "golden.hpp"

#include <cmath>
#include <functional>
#include <numbers>

#include "json.hpp"
#include "steer/optimizer.hpp"
#include "steer/presets.hpp"
#include "steer/scan.hpp"

namespace steer::cli {

namespace {

using std::numbers::pi;

class Collector {
 public:
  void check(std::string name, double expected, double observed,
             double tolerance) {
    const bool pass = std::abs(observed - expected) <= tolerance;
    checks_.push_back({std::move(name), expected, observed, tolerance, false, pass});
  }
  void at_most(std::string name, double expected, double observed,
               double tolerance) {
    const bool pass = observed <= expected + tolerance;
    checks_.push_back({std::move(name), expected, observed, tolerance, true, pass});
  }
  std::vector<GoldenCheck> take() { return std::move(checks_); }

 private:
  std::vector<GoldenCheck> checks_;
};

void chained_reference_family(Collector& c) {
  for (int n = 3; n <= 12; ++n) {
    const SteeringFunctional f(Family::Chained, n);
    const auto r = evaluate(f, presets::chained_reference(n), StateFamily::werner());
    const std::string tag = "chained-eq6-" + std::to_string(n);
    c.check(tag + " C", 2.0 / std::tan(pi / (2.0 * n)), r.lhs_bound, 1e-9);
    c.check(tag + " Q", 2.0 * n * std::cos(pi / (2.0 * n)), r.quantum_value, 1e-9);
    c.check(tag + " V", 1.0 / (n * std::sin(pi / (2.0 * n))), r.visibility, 1e-9);
  }
}

void platonic_bounds(Collector& c) {
  const double r5 = std::sqrt(5.0);
  const std::vector<std::pair<int, double>> expected = {
      {2, 1.0 / std::sqrt(2.0)}, {3, 1.0 / std::sqrt(3.0)},
      {4, 1.0 / std::sqrt(3.0)}, {6, (1.0 + r5) / 6.0}, {10, (3.0 + r5) / 10.0}};
  for (const auto& [n, value] : expected) {
    const SteeringFunctional f(Family::Linear, n);
    c.check("platonic-" + std::to_string(n) + " linear C", value,
            lhs_bound(f, presets::platonic(n)).value, 1e-9);
  }
}

void published_sets(Collector& c) {
  struct Row {
    std::string name;
    int n;
    DirectionSet dirs;
    double q, cb, v;
    double tol;
  };
  const std::vector<Row> rows = {
      {"paper-sec3a", 4, presets::worked_example_n4(), 3.630746, 2.055877, 0.566241, 1e-5},
      {"paper-eq15", 4, presets::optimized_n4(), 3.605552, 2.0, 0.5547, 1e-4},
      {"paper-eq17", 6, presets::optimized_n6(), 8.387765, 4.426295, 0.527709, 1e-4},
      {"paper-eq18-0", 10, presets::optimized_n10(), 14.702807, 7.615109, 0.517936, 1e-4},
  };
  for (const auto& row : rows) {
    const auto r = evaluate(SteeringFunctional(Family::Chained, row.n), row.dirs,
                            StateFamily::werner());
    c.check(row.name + " Q", row.q, r.quantum_value, row.tol);
    c.check(row.name + " C", row.cb, r.lhs_bound, row.tol);
    c.check(row.name + " V", row.v, r.visibility, row.tol);
  }
  // The n = 4 optimized set has C = 2 to the printed precision.
  c.check("paper-eq15 C (tight)", 2.0,
          lhs_bound(SteeringFunctional(Family::Chained, 4), presets::optimized_n4()).value,
          1e-5);
}

void small_n(Collector& c) {
  const SteeringFunctional f2(Family::Chained, 2);
  c.check("chained n=2 {x,z} V", 1.0 / std::sqrt(2.0),
          evaluate(f2, presets::platonic(2), StateFamily::werner()).visibility, 1e-9);
  const SteeringFunctional f3(Family::Chained, 3);
  const auto xyz = evaluate(f3, presets::platonic(3), StateFamily::werner());
  c.check("chained n=3 {x,y,z} Q", 3.0 * std::sqrt(2.0), xyz.quantum_value, 1e-9);
  c.check("chained n=3 {x,y,z} C", 2.0 * std::sqrt(2.0), xyz.lhs_bound, 1e-9);
  c.check("chained n=3 {x,y,z} V", 2.0 / 3.0, xyz.visibility, 1e-9);
  const auto ref3 = evaluate(f3, presets::chained_reference(3), StateFamily::werner());
  c.check("chained-eq6-3 Q", 3.0 * std::sqrt(3.0), ref3.quantum_value, 1e-9);
  c.check("chained-eq6-3 C", 2.0 * std::sqrt(3.0), ref3.lhs_bound, 1e-9);
}

void closed_forms(Collector& c) {
  const double r5 = std::sqrt(5.0);
  for (double theta : {0.2, 0.5, pi / 4.0, 1.1}) {
    const double s = std::sin(2.0 * theta);
    const auto state = make_generalized_werner(1.0, theta);
    const std::string at = " theta=" + std::to_string(theta);
    c.check("linear Q4" + at, std::sqrt(1.0 + 2.0 * s * s) / std::sqrt(3.0),
            quantum_value(SteeringFunctional(Family::Linear, 4), presets::platonic(4), state).value,
            1e-9);
    c.check("linear Q6" + at, (1.0 + r5 * std::sqrt(1.0 + 4.0 * s * s)) / 6.0,
            quantum_value(SteeringFunctional(Family::Linear, 6), presets::platonic(6), state).value,
            1e-9);
    c.check("linear Q10" + at,
            (1.0 + std::sqrt(5.0 + 4.0 * s * s) + 2.0 * std::sqrt(1.0 + 8.0 * s * s)) / 10.0,
            quantum_value(SteeringFunctional(Family::Linear, 10), presets::platonic(10), state).value,
            1e-9);
  }
  c.check("closed form V4(pi/4)", 1.0 / std::sqrt(3.0),
          linear_visibility_closed_form(4, pi / 4.0), 1e-12);
  c.check("closed form V10(pi/4)", (3.0 + r5) / 10.0,
          linear_visibility_closed_form(10, pi / 4.0), 1e-12);
  c.check("scan linear-4 V(pi/4)", 1.0 / std::sqrt(3.0),
          visibility_at(SteeringFunctional(Family::Linear, 4), presets::platonic(4), pi / 4.0),
          1e-9);
  c.check("scan paper-eq15 V(pi/4)", 0.5547,
          visibility_at(SteeringFunctional(Family::Chained, 4), presets::optimized_n4(), pi / 4.0),
          1e-4);
}

void thresholds(Collector& c) {
  struct Row {
    int n;
    DirectionSet dirs;
    double lo;
    double hi;
  };
  const std::vector<Row> rows = {
      {4, presets::optimized_n4(), 0.120673, 1.45012},
      {6, presets::optimized_n6(), 0.0605856, 1.51021},
      {10, presets::optimized_n10(), 0.0610922, 1.5097},
  };
  for (const auto& row : rows) {
    const std::string tag = "threshold n=" + std::to_string(row.n);
    const auto t = threshold_angles(SteeringFunctional(Family::Chained, row.n), row.dirs);
    c.check(tag + " lo", row.lo, t.lo, 1e-3);
    c.check(tag + " hi", row.hi, t.hi, 1e-3);
  }
  for (int n : {4, 6, 10}) {
    const auto t = threshold_angles(SteeringFunctional(Family::Linear, n), presets::platonic(n));
    c.check("linear threshold n=" + std::to_string(n) + " lo", 0.0, t.lo, 1e-12);
    c.check("linear threshold n=" + std::to_string(n) + " hi", pi / 2.0, t.hi, 1e-12);
  }
}

void crossovers(Collector& c) {
  struct Row {
    int n;
    DirectionSet dirs;
    double lo;
    double hi;
  };
  const std::vector<Row> rows = {
      {4, presets::optimized_n4(), 0.25981, 1.35482},
      {6, presets::optimized_n6(), 0.121383, 1.44941},
      {10, presets::optimized_n10(), 0.193389, 1.37741},
  };
  for (const auto& row : rows) {
    const std::string tag = "crossover n=" + std::to_string(row.n);
    const auto x = crossover_angles(SteeringFunctional(Family::Chained, row.n), row.dirs, row.n);
    c.check(tag + " lo", row.lo, x.lo, 1e-3);
    c.check(tag + " hi", row.hi, x.hi, 1e-3);
  }
}

void optimizer(Collector& c) {
  const std::vector<std::tuple<int, double, double>> targets = {
      {2, 1.0 / std::sqrt(2.0), 1e-6}, {3, 2.0 / 3.0, 1e-6}, {4, 0.5547, 1e-4},
      {6, 0.527709, 1e-4}, {10, 0.517936, 5e-4}};
  const OptimizerConfig cfg;
  for (const auto& [n, target, tol] : targets) {
    const auto r = optimize_directions(SteeringFunctional(Family::Chained, n),
                                       StateFamily::werner(), cfg);
    c.at_most("optimize chained n=" + std::to_string(n) + " V", target,
              r.report.visibility, tol);
  }
  const SteeringFunctional f4(Family::Chained, 4);
  c.check("polish paper-eq15 V", 0.5547,
          polish_directions(f4, StateFamily::werner(), presets::optimized_n4(), cfg)
              .report.visibility,
          1e-4);
  c.at_most("polish chained-eq6-4 V < 1/(4 sin(pi/8))", 1.0 / (4.0 * std::sin(pi / 8.0)),
            polish_directions(f4, StateFamily::werner(), presets::chained_reference(4), cfg)
                    .report.visibility + 1e-9,
            0.0);
  const SteeringFunctional f3(Family::Chained, 3);
  c.check("polish platonic-3 V stays 2/3", 2.0 / 3.0,
          polish_directions(f3, StateFamily::werner(), presets::platonic(3), cfg)
              .report.visibility,
          1e-9);
}

}  // namespace

std::vector<GoldenCheck> run_golden_suite(const GoldenOptions& options) {
  Collector c;
  chained_reference_family(c);
  platonic_bounds(c);
  published_sets(c);
  small_n(c);
  closed_forms(c);
  thresholds(c);
  crossovers(c);
  if (options.include_optimizer) optimizer(c);
  return c.take();
}

std::string golden_report_json(const std::vector<GoldenCheck>& checks) {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& check : checks) {
    doc.push_back({{"name", check.name},
                   {"expected", check.expected},
                   {"observed", check.observed},
                   {"tolerance", check.tolerance},
                   {"pass", check.pass}});
  }
  return doc.dump(2);
}

}  // namespace steer::cli
