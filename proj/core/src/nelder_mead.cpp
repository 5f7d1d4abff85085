#include "steer/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "steer/error.hpp"

namespace steer {

NelderMeadResult nelder_mead(
    const std::function<double(const std::vector<double>&)>& f,
    std::vector<double> x0, const NelderMeadOptions& options) {
  const std::size_t dim = x0.size();
  NelderMeadResult out{x0, f(x0), 0, 1, {}};
  if (dim == 0 || options.max_iters <= 0) return out;

  const double d = static_cast<double>(dim);
  const double reflect = 1.0;
  const double expand = 1.0 + 2.0 / d;
  const double contract = 0.75 - 1.0 / (2.0 * d);
  const double shrink = 1.0 - 1.0 / d;

  std::vector<std::vector<double>> simplex(dim + 1, x0);
  std::vector<double> values(dim + 1, out.f);
  for (std::size_t i = 0; i < dim; ++i) {
    simplex[i + 1][i] += options.initial_step;
    values[i + 1] = f(simplex[i + 1]);
    ++out.evaluations;
  }

  std::vector<std::size_t> order(dim + 1);
  std::vector<double> centroid(dim), trial(dim), trial2(dim);
  auto point = [&](double t, std::vector<double>& dst,
                   const std::vector<double>& worst) {
    for (std::size_t k = 0; k < dim; ++k)
      dst[k] = centroid[k] + t * (worst[k] - centroid[k]);
  };

  for (int iter = 0; iter < options.max_iters; ++iter) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return values[a] < values[b];
    });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second = order[dim - 1];
    if (values[worst] - values[best] <= options.f_tol) break;
    ++out.iterations;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i <= dim; ++i) {
      if (i == worst) continue;
      for (std::size_t k = 0; k < dim; ++k) centroid[k] += simplex[i][k];
    }
    for (double& c : centroid) c /= d;

    point(-reflect, trial, simplex[worst]);
    const double fr = f(trial);
    ++out.evaluations;

    if (fr < values[best]) {
      point(-expand, trial2, simplex[worst]);
      const double fe = f(trial2);
      ++out.evaluations;
      if (fe < fr) {
        simplex[worst] = trial2;
        values[worst] = fe;
      } else {
        simplex[worst] = trial;
        values[worst] = fr;
      }
    } else if (fr < values[second]) {
      simplex[worst] = trial;
      values[worst] = fr;
    } else {
      const bool outside = fr < values[worst];
      point(outside ? -contract : contract, trial2, simplex[worst]);
      const double fc = f(trial2);
      ++out.evaluations;
      if (fc < std::min(fr, values[worst])) {
        simplex[worst] = trial2;
        values[worst] = fc;
      } else {
        for (std::size_t i = 0; i <= dim; ++i) {
          if (i == best) continue;
          for (std::size_t k = 0; k < dim; ++k)
            simplex[i][k] =
                simplex[best][k] + shrink * (simplex[i][k] - simplex[best][k]);
          values[i] = f(simplex[i]);
          ++out.evaluations;
        }
      }
    }
    if (options.keep_history)
      out.history.push_back(*std::min_element(values.begin(), values.end()));
  }

  const auto it = std::min_element(values.begin(), values.end());
  if (*it < out.f) {
    out.f = *it;
    out.x = simplex[static_cast<std::size_t>(it - values.begin())];
  }
  return out;
}

}  // namespace steer
