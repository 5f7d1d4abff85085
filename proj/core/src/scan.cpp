#include "steer/scan.hpp"

#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include "steer/error.hpp"

namespace steer {

namespace {

using std::numbers::pi;

constexpr int kBisectionSteps = 60;
constexpr double kEndpointSlack = 1e-12;
const double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_grid(const std::vector<double>& grid) {
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] >= 0.0 && grid[i] <= pi / 2.0))
      throw DomainError("scan grid point outside [0, pi/2]");
    if (i > 0 && !(grid[i] > grid[i - 1]))
      throw DomainError("scan grid must be strictly increasing");
  }
}

std::vector<double> scan_column(const SteeringFunctional& f,
                                const DirectionSet& b,
                                const std::vector<double>& grid,
                                Strategy strategy) {
  const auto m = alice_group_vectors(f, b);
  const double bound = lhs_bound_value(m);
  std::vector<double> out;
  out.reserve(grid.size());
  for (double theta : grid) {
    const double q =
        quantum_value(f, b, make_generalized_werner(1.0, theta), strategy).value;
    out.push_back(q > 0.0 ? bound / q : kNaN);
  }
  return out;
}

// g(a) and g(b) have opposite signs; returns the bracketed root midpoint.
double bisect(const std::function<double(double)>& g, double a, double b) {
  double ga = g(a);
  for (int i = 0; i < kBisectionSteps; ++i) {
    const double mid = 0.5 * (a + b);
    const double gm = g(mid);
    if ((gm > 0.0) == (ga > 0.0)) {
      a = mid;
      ga = gm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

std::string label(const SteeringFunctional& f, int n) {
  return to_string(f.family()) + "-" + std::to_string(n);
}

}  // namespace

std::vector<double> uniform_theta_grid(std::size_t points) {
  if (points < 2) throw DomainError("theta grid needs at least 2 points");
  std::vector<double> grid(points);
  for (std::size_t i = 0; i < points; ++i)
    grid[i] = (pi / 2.0) * static_cast<double>(i) /
              static_cast<double>(points - 1);
  grid.back() = pi / 2.0;
  return grid;
}

double visibility_at(const SteeringFunctional& f, const DirectionSet& b,
                     double theta, Strategy strategy) {
  const auto m = alice_group_vectors(f, b);
  return visibility_value(m, make_generalized_werner(1.0, theta), strategy);
}

ScanResult scan_theta(const SteeringFunctional& f, const DirectionSet& b,
                      const std::vector<double>& grid, Strategy strategy) {
  require_grid(grid);
  const auto column = scan_column(f, b, grid, strategy);
  ScanResult out;
  out.n = f.n();
  (f.family() == Family::Linear ? out.linear_label : out.chained_label) =
      label(f, f.n());
  std::ostringstream spec;
  spec << grid.size() << " points on [" << (grid.empty() ? 0.0 : grid.front())
       << ", " << (grid.empty() ? 0.0 : grid.back()) << "]";
  out.grid_spec = spec.str();
  out.rows.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const bool linear = f.family() == Family::Linear;
    out.rows.push_back({grid[i], linear ? column[i] : kNaN,
                        linear ? kNaN : column[i]});
  }
  return out;
}

ScanResult scan_compare(int n, const DirectionSet& linear,
                        const DirectionSet& chained,
                        const std::vector<double>& grid, Strategy strategy) {
  const SteeringFunctional fl(Family::Linear, n);
  const SteeringFunctional fc(Family::Chained, n);
  auto out = scan_theta(fl, linear, grid, strategy);
  const auto column = scan_column(fc, chained, grid, strategy);
  for (std::size_t i = 0; i < grid.size(); ++i) out.rows[i].v_chained = column[i];
  out.chained_label = label(fc, n);
  return out;
}

double linear_visibility_closed_form(int n, double theta) {
  const double s = std::sin(2.0 * theta);
  const double s2 = s * s;
  const double r5 = std::sqrt(5.0);
  switch (n) {
    case 4:
      return 1.0 / std::sqrt(1.0 + 2.0 * s2);
    case 6:
      return (1.0 + r5) / (1.0 + r5 * std::sqrt(1.0 + 4.0 * s2));
    case 10:
      return (3.0 + r5) /
             (1.0 + std::sqrt(5.0 + 4.0 * s2) + 2.0 * std::sqrt(1.0 + 8.0 * s2));
    default:
      throw DomainError("closed-form linear visibility only for n in {4, 6, 10}");
  }
}

AngleInterval threshold_angles(const SteeringFunctional& f,
                               const DirectionSet& b, Strategy strategy) {
  const auto m = alice_group_vectors(f, b);
  auto g = [&](double theta) {
    return visibility_value(m, make_generalized_werner(1.0, theta), strategy) -
           1.0;
  };
  if (!(g(pi / 4.0) < 0.0)) {
    throw NoRootError("no violation at theta = pi/4 (V >= 1)");
  }
  // V = 1 exactly at an endpoint counts as "no violation lost there".
  const double lo = g(0.0) <= kEndpointSlack ? 0.0 : bisect(g, 0.0, pi / 4.0);
  const double hi =
      g(pi / 2.0) <= kEndpointSlack ? pi / 2.0 : bisect(g, pi / 4.0, pi / 2.0);
  return {lo, hi};
}

AngleInterval crossover_angles(const SteeringFunctional& f_chained,
                               const DirectionSet& b_chained, int n,
                               Strategy strategy) {
  linear_visibility_closed_form(n, 0.0);  // validates n
  if (f_chained.n() != n)
    throw DomainError("chained functional size does not match n");
  const auto m = alice_group_vectors(f_chained, b_chained);
  auto d = [&](double theta) {
    return visibility_value(m, make_generalized_werner(1.0, theta), strategy) -
           linear_visibility_closed_form(n, theta);
  };
  if (!(d(pi / 4.0) < 0.0))
    throw NoRootError("chained visibility not below linear at theta = pi/4");
  if (!(d(0.0) > 0.0) || !(d(pi / 2.0) > 0.0))
    throw NoRootError("no linear/chained crossing inside (0, pi/2)");
  return {bisect(d, 0.0, pi / 4.0), bisect(d, pi / 4.0, pi / 2.0)};
}

void write_scan_csv(std::ostream& out, const ScanResult& scan) {
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << "theta,v_linear,v_chained\n" << std::setprecision(17);
  for (const auto& row : scan.rows)
    out << row.theta << ',' << row.v_linear << ',' << row.v_chained << '\n';
  out.flags(flags);
  out.precision(precision);
}

}  // namespace steer
