#pragma once

#include <cstdint>
#include <vector>

#include "steer/quantum.hpp"

namespace steer {

struct OptimizerConfig {
  int restarts = 200;
  std::uint64_t seed = 0x5eed2019ULL;
  /// Nelder-Mead iteration budget per restart (shared across re-launches).
  int max_iters = 2000;
  double objective_tol = 1e-10;
  /// Initial simplex edge, radians.
  double simplex_scale = 0.3;
  /// Quotient global rotations out of the search space where the state
  /// family allows it.
  bool gauge_fix = true;
  /// Worker threads; 0 picks hardware concurrency. Results do not depend
  /// on this value.
  int threads = 0;
  Strategy strategy = Strategy::General;

  /// Throws DomainError on non-positive counts or tolerance.
  void validate() const;
};

struct OptimizerResult {
  DirectionSet best;
  EvalReport report;
  /// Restarts whose final objective lies within 1e-6 of the best.
  int restarts_within_tol;
  /// Final objective of every restart, in restart order.
  std::vector<double> trace;
};

/// Multi-start derivative-free minimization of the visibility over Bob's
/// 2n spherical angles. Requires 2 <= n <= 12.
OptimizerResult optimize_directions(const SteeringFunctional& f,
                                    const StateFamily& family,
                                    const OptimizerConfig& cfg = {});

/// Single local descent starting from `start`; the result is never worse
/// than the starting visibility.
OptimizerResult polish_directions(const SteeringFunctional& f,
                                  const StateFamily& family,
                                  const DirectionSet& start,
                                  const OptimizerConfig& cfg = {});

inline constexpr int kMaxOptimizerN = 12;

}  // namespace steer
