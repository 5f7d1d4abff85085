#pragma once

#include <functional>
#include <vector>

namespace steer {

struct NelderMeadOptions {
  int max_iters = 2000;
  /// Stop when the simplex spread f_worst - f_best falls below this.
  double f_tol = 1e-10;
  /// Edge length of the initial axis-aligned simplex.
  double initial_step = 0.3;
  /// Record best value after every iteration.
  bool keep_history = false;
};

struct NelderMeadResult {
  std::vector<double> x;
  double f;
  int iterations;
  int evaluations;
  std::vector<double> history;
};

/// Nelder-Mead with dimension-adaptive coefficients (Gao & Han). Uses
/// function values only. The returned point is never worse than x0.
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> x0,
                             const NelderMeadOptions& options);

}  // namespace steer
