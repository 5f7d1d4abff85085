#include "steer/optimizer.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <span>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include "steer/error.hpp"
#include "steer/nelder_mead.hpp"

namespace steer {

namespace {

using std::numbers::pi;

enum class Gauge {
  None,         // all 2n angles free
  AzimuthOnly,  // phi_1 = 0
  Full,         // b_1 = +z, phi_2 = 0
};

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// splitmix64 stream; bit-identical on every platform.
class RestartRng {
 public:
  explicit RestartRng(std::uint64_t seed) : state_(seed) {}
  double uniform() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return static_cast<double>(splitmix64(state_) >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

class Parametrization {
 public:
  Parametrization(int n, Gauge gauge) : n_(n), gauge_(gauge) {}

  std::size_t dimension() const {
    switch (gauge_) {
      case Gauge::None: return 2 * n_;
      case Gauge::AzimuthOnly: return 2 * n_ - 1;
      case Gauge::Full: return 2 * n_ - 3;
    }
    return 0;
  }

  // Angles (theta_1, phi_1, ..., theta_n, phi_n) from free parameters.
  void angles(const std::vector<double>& p, std::vector<double>& out) const {
    out.assign(2 * n_, 0.0);
    std::size_t k = 0;
    for (int i = 0; i < n_; ++i) {
      const bool theta_free = !(gauge_ == Gauge::Full && i == 0);
      const bool phi_free = !((gauge_ != Gauge::None && i == 0) ||
                              (gauge_ == Gauge::Full && i == 1));
      if (theta_free) out[2 * i] = p[k++];
      if (phi_free) out[2 * i + 1] = p[k++];
    }
  }

  std::vector<double> random_start(RestartRng& rng) const {
    std::vector<double> p;
    p.reserve(dimension());
    for (int i = 0; i < n_; ++i) {
      const double theta = std::acos(1.0 - 2.0 * rng.uniform());
      const double phi = 2.0 * pi * rng.uniform();
      const bool theta_free = !(gauge_ == Gauge::Full && i == 0);
      const bool phi_free = !((gauge_ != Gauge::None && i == 0) ||
                              (gauge_ == Gauge::Full && i == 1));
      if (theta_free) p.push_back(theta);
      if (phi_free) p.push_back(phi);
    }
    return p;
  }

 private:
  int n_;
  Gauge gauge_;
};

DirectionSet directions_from_angles(const std::vector<double>& angles) {
  std::vector<UnitVector3> dirs;
  dirs.reserve(angles.size() / 2);
  for (std::size_t i = 0; i + 1 < angles.size(); i += 2)
    dirs.push_back(UnitVector3::from_angles(angles[i], angles[i + 1]));
  return DirectionSet(std::move(dirs));
}

std::vector<double> canonical_angles(const DirectionSet& b) {
  std::vector<double> out;
  out.reserve(2 * b.size());
  for (const auto& d : b) {
    out.push_back(d.theta());
    out.push_back(d.phi());
  }
  return out;
}

// Visibility as a function of the free angles. With a nonzero smoothing
// exponent p the LHS maximum over sign patterns is replaced by the p-norm of
// the pattern values, an upper surrogate that removes the kinks where the
// maximizing pattern switches.
class Objective {
 public:
  Objective(const SteeringFunctional& f, const StateFamily& family,
            Strategy strategy, Parametrization param)
      : f_(f),
        state_(family.at(1.0)),
        strategy_(strategy),
        param_(param) {}

  double operator()(const std::vector<double>& p) const {
    return evaluate_at(p, 0);
  }

  double evaluate_at(const std::vector<double>& p, int smoothing) const {
    thread_local std::vector<double> angles;
    thread_local std::vector<Vec3> m;
    param_.angles(p, angles);
    const std::size_t n = static_cast<std::size_t>(f_.n());
    m.resize(n);
    auto axis = [&](std::size_t i) {
      const double st = std::sin(angles[2 * i]);
      return Vec3(st * std::cos(angles[2 * i + 1]),
                  st * std::sin(angles[2 * i + 1]), std::cos(angles[2 * i]));
    };
    if (f_.family() == Family::Linear) {
      for (std::size_t i = 0; i < n; ++i) m[i] = axis(i) / static_cast<double>(n);
    } else {
      const Vec3 first = axis(0);
      Vec3 prev = first;
      for (std::size_t i = 1; i < n; ++i) {
        const Vec3 cur = axis(i);
        m[i] = prev + cur;
        prev = cur;
      }
      m[0] = first - prev;
    }
    if (smoothing == 0) return visibility_value(m, state_, strategy_);
    double q = 0.0;
    for (const auto& v : m) {
      double term = (state_.T * v).norm();
      if (strategy_ == Strategy::General)
        term = std::max(term, std::abs(state_.rB.dot(v)));
      q += term;
    }
    if (q == 0.0) return std::numeric_limits<double>::infinity();
    return smoothed_bound(m, smoothing) / q;
  }

  const Parametrization& param() const { return param_; }

 private:
  // (sum_s |v_s|^p)^(1/p) for p = 2^k, k >= 1, via Gray-code enumeration.
  static double smoothed_bound(std::span<const Vec3> m, int p) {
    thread_local std::vector<double> sq;
    const std::size_t n = m.size();
    const std::uint32_t steps = 1u << (n - 1);
    sq.resize(steps);
    Vec3 sum = Vec3::Zero();
    for (const auto& v : m) sum += v;
    std::vector<signed char> sign(n, 1);
    sq[0] = sum.squaredNorm();
    double peak = sq[0];
    for (std::uint32_t k = 1; k < steps; ++k) {
      const std::size_t idx = 1 + static_cast<std::size_t>(std::countr_zero(k));
      sum -= (2.0 * sign[idx]) * m[idx];
      sign[idx] = static_cast<signed char>(-sign[idx]);
      sq[k] = sum.squaredNorm();
      peak = std::max(peak, sq[k]);
    }
    if (peak == 0.0) return 0.0;
    const int squarings = std::countr_zero(static_cast<unsigned>(p)) - 1;
    double acc = 0.0;
    for (double v : sq) {
      double t = v / peak;
      for (int i = 0; i < squarings; ++i) t *= t;
      acc += t;
    }
    return std::sqrt(peak) * std::pow(acc, 1.0 / p);
  }

  SteeringFunctional f_;
  TwoQubitState state_;
  Strategy strategy_;
  Parametrization param_;
};

struct Candidate {
  double objective;
  std::vector<double> angles;  // canonical
};

// Smoothing exponents of the continuation phases before the exact phase.
constexpr std::array<int, 3> kSmoothingSchedule = {16, 64, 256};

Candidate to_candidate(const Objective& objective, const std::vector<double>& x,
                       double fx) {
  std::vector<double> angles;
  objective.param().angles(x, angles);
  return {fx, canonical_angles(directions_from_angles(angles))};
}

// Exact-objective Nelder-Mead, re-launched from the incumbent while it keeps
// improving and budget remains. `best` is the incumbent, updated in place.
void refine_exact(const Objective& objective, std::vector<double>& x,
                  double& fx, int budget, double step,
                  const OptimizerConfig& cfg) {
  NelderMeadOptions opts;
  opts.f_tol = cfg.objective_tol;
  opts.initial_step = step;
  while (budget > 0) {
    opts.max_iters = budget;
    auto run = nelder_mead(objective, x, opts);
    budget -= std::max(run.iterations, 1);
    const bool improved = run.f < fx - cfg.objective_tol;
    if (run.f < fx) {
      fx = run.f;
      x = std::move(run.x);
    }
    if (!improved) break;
  }
}

// One restart: continuation through the smoothing schedule, then exact
// refinement. The budget is split evenly across the phases; the incumbent
// (best exact value seen) never gets worse.
Candidate descend(const Objective& objective, std::vector<double> x,
                  const OptimizerConfig& cfg) {
  const int phases = static_cast<int>(kSmoothingSchedule.size()) + 1;
  const int per_phase = std::max(1, cfg.max_iters / phases);
  int budget = cfg.max_iters;

  std::vector<double> best_x = x;
  double best_f = objective(x);
  double step = cfg.simplex_scale;
  for (int p : kSmoothingSchedule) {
    if (budget <= per_phase) break;
    NelderMeadOptions opts;
    opts.f_tol = cfg.objective_tol;
    opts.initial_step = step;
    opts.max_iters = per_phase;
    auto run = nelder_mead(
        [&](const std::vector<double>& v) { return objective.evaluate_at(v, p); },
        x, opts);
    budget -= std::max(run.iterations, 1);
    x = std::move(run.x);
    const double exact = objective(x);
    if (exact < best_f) {
      best_f = exact;
      best_x = x;
    }
    step = cfg.simplex_scale / 3.0;
  }
  refine_exact(objective, best_x, best_f, budget, step, cfg);
  return to_candidate(objective, best_x, best_f);
}

bool better(const Candidate& a, const Candidate& b) {
  if (a.objective != b.objective) return a.objective < b.objective;
  return a.angles < b.angles;
}

OptimizerResult finish(const SteeringFunctional& f, const StateFamily& family,
                       const OptimizerConfig& cfg,
                       const std::vector<Candidate>& candidates) {
  std::size_t best = 0;
  for (std::size_t r = 1; r < candidates.size(); ++r)
    if (better(candidates[r], candidates[best])) best = r;
  auto dirs = directions_from_angles(candidates[best].angles);
  auto report = evaluate(f, dirs, family, cfg.strategy);
  int within = 0;
  std::vector<double> trace;
  trace.reserve(candidates.size());
  for (const auto& c : candidates) {
    trace.push_back(c.objective);
    if (c.objective <= candidates[best].objective + 1e-6) ++within;
  }
  return {std::move(dirs), std::move(report), within, std::move(trace)};
}

void require_optimizable(const SteeringFunctional& f) {
  if (f.n() > kMaxOptimizerN) {
    throw DomainError("optimizer supports 2 <= n <= " +
                      std::to_string(kMaxOptimizerN) + ", got n = " +
                      std::to_string(f.n()));
  }
}

}  // namespace

void OptimizerConfig::validate() const {
  if (restarts < 1) throw DomainError("restarts must be >= 1");
  if (max_iters < 1) throw DomainError("max_iters must be >= 1");
  if (!(objective_tol > 0.0)) throw DomainError("objective_tol must be > 0");
  if (!(simplex_scale > 0.0)) throw DomainError("simplex_scale must be > 0");
  if (threads < 0) throw DomainError("threads must be >= 0");
}

OptimizerResult optimize_directions(const SteeringFunctional& f,
                                    const StateFamily& family,
                                    const OptimizerConfig& cfg) {
  cfg.validate();
  require_optimizable(f);
  Gauge gauge = Gauge::None;
  if (cfg.gauge_fix)
    gauge = family.rotation_covariant() ? Gauge::Full : Gauge::AzimuthOnly;
  const Objective objective(f, family, cfg.strategy, Parametrization(f.n(), gauge));

  std::vector<Candidate> candidates(static_cast<std::size_t>(cfg.restarts));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int r = next++; r < cfg.restarts; r = next++) {
      RestartRng rng(splitmix64(cfg.seed + static_cast<std::uint64_t>(r)));
      candidates[static_cast<std::size_t>(r)] =
          descend(objective, objective.param().random_start(rng), cfg);
    }
  };
  unsigned threads = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads)
                                     : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(cfg.restarts));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return finish(f, family, cfg, candidates);
}

OptimizerResult polish_directions(const SteeringFunctional& f,
                                  const StateFamily& family,
                                  const DirectionSet& start,
                                  const OptimizerConfig& cfg) {
  cfg.validate();
  require_optimizable(f);
  if (start.size() != static_cast<std::size_t>(f.n()))
    throw DomainError("starting direction set size does not match functional");
  const Objective objective(f, family, cfg.strategy,
                            Parametrization(f.n(), Gauge::None));
  auto x = canonical_angles(start);
  double fx = objective(x);
  refine_exact(objective, x, fx, cfg.max_iters, cfg.simplex_scale, cfg);
  Candidate polished = to_candidate(objective, x, fx);

  // Angle round-off must not make the result worse than the input.
  const double start_v = evaluate(f, start, family, cfg.strategy).visibility;
  auto result = finish(f, family, cfg, {polished});
  if (result.report.visibility > start_v) {
    auto report = evaluate(f, start, family, cfg.strategy);
    return {start, std::move(report), 1, {start_v}};
  }
  return result;
}

}  // namespace steer
