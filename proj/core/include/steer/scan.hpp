#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "steer/quantum.hpp"

namespace steer {

struct ScanRow {
  double theta;
  /// NaN when the column was not scanned or Q = 0 at this theta.
  double v_linear;
  double v_chained;
};

struct ScanResult {
  int n = 0;
  std::string linear_label;
  std::string chained_label;
  std::string grid_spec;
  std::vector<ScanRow> rows;
};

/// `points` uniform samples of [0, pi/2], endpoints included.
std::vector<double> uniform_theta_grid(std::size_t points);

/// Visibility of (f, b) against the generalized Werner family, one row
/// per grid angle. Only f's family column is filled.
/// Grid must be strictly increasing within [0, pi/2].
ScanResult scan_theta(const SteeringFunctional& f, const DirectionSet& b,
                      const std::vector<double>& grid,
                      Strategy strategy = Strategy::General);

/// Both columns: linear set and chained set, same n.
ScanResult scan_compare(int n, const DirectionSet& linear,
                        const DirectionSet& chained,
                        const std::vector<double>& grid,
                        Strategy strategy = Strategy::General);

/// Visibility at a single angle; +inf when Q = 0.
double visibility_at(const SteeringFunctional& f, const DirectionSet& b,
                     double theta, Strategy strategy = Strategy::General);

/// Analytic linear-family visibility on the Platonic sets, n in {4, 6, 10}.
double linear_visibility_closed_form(int n, double theta);

struct AngleInterval {
  double lo;
  double hi;
};

/// Interval of theta on which V(theta) <= 1, by fixed-iteration bisection on
/// each half of [0, pi/2]. Endpoints are returned when V <= 1 there.
/// Throws NoRootError if V(pi/4) >= 1.
AngleInterval threshold_angles(const SteeringFunctional& f,
                               const DirectionSet& b,
                               Strategy strategy = Strategy::General);

/// Interval where the chained visibility lies below the linear closed form.
/// Throws NoRootError if either half-interval has no crossing.
AngleInterval crossover_angles(const SteeringFunctional& f_chained,
                               const DirectionSet& b_chained, int n,
                               Strategy strategy = Strategy::General);

/// CSV with header `theta,v_linear,v_chained`, 17 significant digits.
void write_scan_csv(std::ostream& out, const ScanResult& scan);

}  // namespace steer
