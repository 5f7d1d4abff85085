#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "steer/error.hpp"
#include "steer/nelder_mead.hpp"
#include "steer/optimizer.hpp"
#include "steer/presets.hpp"

using namespace steer;
using std::numbers::pi;

namespace {

OptimizerConfig quick(int restarts = 40) {
  OptimizerConfig cfg;
  cfg.restarts = restarts;
  return cfg;
}

}  // namespace

TEST(NelderMead, MinimizesRosenbrock) {
  auto rosen = [](const std::vector<double>& x) {
    return 100 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1 - x[0], 2);
  };
  NelderMeadOptions opts;
  opts.max_iters = 5000;
  opts.f_tol = 1e-14;
  const auto r = nelder_mead(rosen, {-1.2, 1.0}, opts);
  EXPECT_NEAR(r.x[0], 1.0, 1e-3);
  EXPECT_NEAR(r.x[1], 1.0, 1e-3);
}

TEST(NelderMead, HistoryIsMonotone) {
  auto f = [](const std::vector<double>& x) {
    return std::abs(x[0] - 0.3) + std::abs(x[1] + 0.2) + 0.1 * std::abs(x[2]);
  };
  NelderMeadOptions opts;
  opts.keep_history = true;
  opts.max_iters = 500;
  const auto r = nelder_mead(f, {1.0, 1.0, 1.0}, opts);
  ASSERT_FALSE(r.history.empty());
  for (std::size_t i = 1; i < r.history.size(); ++i)
    EXPECT_LE(r.history[i], r.history[i - 1]);
  EXPECT_LE(r.f, f({1.0, 1.0, 1.0}));
}

TEST(OptimizerConfig, Validation) {
  OptimizerConfig cfg;
  cfg.restarts = 0;
  EXPECT_THROW(cfg.validate(), DomainError);
  cfg = {};
  cfg.max_iters = 0;
  EXPECT_THROW(cfg.validate(), DomainError);
  cfg = {};
  cfg.objective_tol = 0;
  EXPECT_THROW(cfg.validate(), DomainError);
}

TEST(Optimize, RejectsLargeN) {
  EXPECT_THROW(optimize_directions(SteeringFunctional(Family::Chained, 13),
                                   StateFamily::werner(), quick(1)),
               DomainError);
}

TEST(Optimize, ChainedN2) {
  const auto r = optimize_directions(SteeringFunctional(Family::Chained, 2),
                                     StateFamily::werner(), quick());
  EXPECT_NEAR(r.report.visibility, 1 / std::sqrt(2.0), 1e-6);
}

TEST(Optimize, ChainedN3ReachesTwoThirds) {
  const auto r = optimize_directions(SteeringFunctional(Family::Chained, 3),
                                     StateFamily::werner(), quick());
  EXPECT_NEAR(r.report.visibility, 2.0 / 3.0, 1e-6);
  EXPECT_GT(r.restarts_within_tol, 1);
  // Two inequivalent sets attain the same minimum.
  const SteeringFunctional f(Family::Chained, 3);
  EXPECT_NEAR(evaluate(f, presets::chained_reference(3), StateFamily::werner()).visibility,
              2.0 / 3.0, 1e-12);
  EXPECT_NEAR(evaluate(f, presets::platonic(3), StateFamily::werner()).visibility, 2.0 / 3.0,
              1e-12);
}

TEST(Optimize, ChainedN4MatchesPublishedMinimum) {
  const auto r = optimize_directions(SteeringFunctional(Family::Chained, 4),
                                     StateFamily::werner(), quick());
  EXPECT_LE(r.report.visibility, 0.5547 + 1e-4);
}

TEST(Optimize, ReportConsistentWithIndependentEvaluation) {
  const SteeringFunctional f(Family::Chained, 5);
  const auto r = optimize_directions(f, StateFamily::werner(), quick(10));
  const auto again = evaluate(f, r.best, StateFamily::werner());
  EXPECT_NEAR(r.report.visibility, again.visibility, 1e-12);
  EXPECT_EQ(r.trace.size(), 10u);
  for (double v : r.trace) EXPECT_GE(v, r.report.visibility - 1e-12);
}

TEST(Optimize, DeterministicAcrossThreadCounts) {
  const SteeringFunctional f(Family::Chained, 4);
  auto cfg = quick(12);
  cfg.threads = 1;
  const auto a = optimize_directions(f, StateFamily::werner(), cfg);
  cfg.threads = 4;
  const auto b = optimize_directions(f, StateFamily::werner(), cfg);
  EXPECT_EQ(a.trace, b.trace);
  EXPECT_EQ(a.report.visibility, b.report.visibility);
  for (std::size_t i = 0; i < a.best.size(); ++i) EXPECT_EQ(a.best[i], b.best[i]);
  cfg.seed += 1;
  const auto c = optimize_directions(f, StateFamily::werner(), cfg);
  EXPECT_NE(a.trace, c.trace);
}

TEST(Optimize, GeneralizedWernerUsesAzimuthGauge) {
  const SteeringFunctional f(Family::Linear, 3);
  const auto r = optimize_directions(f, StateFamily::generalized_werner(0.4), quick(10));
  // Linear n = 3 on T = diag(s, -s, 1): best is the coordinate frame, V = C/Q
  // with C = 1/sqrt3 and Q = (2s + 1) / 3.
  const double s = std::sin(0.8);
  EXPECT_LE(r.report.visibility, (1 / std::sqrt(3.0)) / ((2 * s + 1) / 3) + 1e-6);
}

TEST(Polish, PublishedN4IsNearStationary) {
  const SteeringFunctional f(Family::Chained, 4);
  const auto start = presets::optimized_n4();
  const double v0 = evaluate(f, start, StateFamily::werner()).visibility;
  const auto r = polish_directions(f, StateFamily::werner(), start, {});
  EXPECT_LE(r.report.visibility, v0 + 1e-12);
  EXPECT_NEAR(r.report.visibility, 0.5547, 1e-4);
}

TEST(Polish, ReferenceSetIsNotOptimal) {
  const SteeringFunctional f(Family::Chained, 4);
  const auto r = polish_directions(f, StateFamily::werner(), presets::chained_reference(4), {});
  EXPECT_LT(r.report.visibility, 1 / (4 * std::sin(pi / 8)));
}

TEST(Polish, NoImprovementBelowTwoThirds) {
  const SteeringFunctional f(Family::Chained, 3);
  for (const auto& start : {presets::platonic(3), presets::chained_reference(3)}) {
    const auto r = polish_directions(f, StateFamily::werner(), start, {});
    EXPECT_GE(r.report.visibility, 2.0 / 3.0 - 1e-9);
    EXPECT_LE(r.report.visibility, 2.0 / 3.0 + 1e-12);
  }
}

TEST(Polish, SizeMismatch) {
  EXPECT_THROW(polish_directions(SteeringFunctional(Family::Chained, 4), StateFamily::werner(),
                                 presets::platonic(3), {}),
               DomainError);
}
