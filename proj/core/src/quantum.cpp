#include "steer/quantum.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>

#include "steer/error.hpp"

namespace steer {

std::string to_string(Strategy strategy) {
  return strategy == Strategy::General ? "general" : "projective";
}

Strategy parse_strategy(const std::string& text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "general") return Strategy::General;
  if (lower == "projective" || lower == "projective-only" ||
      lower == "projectiveonly")
    return Strategy::ProjectiveOnly;
  throw DomainError("unknown strategy '" + text +
                    "' (expected general|projective)");
}

TermValue term_value(const Vec3& m, const TwoQubitState& state,
                     Strategy strategy) {
  const Vec3 tm = state.T * m;
  const double correlated = tm.norm();
  const UnitVector3 axis =
      correlated > 0.0 ? UnitVector3::normalized(tm) : UnitVector3();
  if (strategy == Strategy::General) {
    const double marginal = std::abs(state.rB.dot(m));
    if (marginal > correlated) return {marginal, axis, true};
  }
  return {correlated, axis, false};
}

QuantumValue quantum_value(const SteeringFunctional& f, const DirectionSet& b,
                           const TwoQubitState& state, Strategy strategy) {
  const auto m = alice_group_vectors(f, b);
  QuantumValue out{0.0, {}};
  out.alice_axes.reserve(m.size());
  for (const auto& v : m) {
    const auto term = term_value(v, state, strategy);
    out.value += term.value;
    out.alice_axes.push_back(term.alice_axis);
  }
  return out;
}

double quantum_value_oracle(const SteeringFunctional& f, const DirectionSet& b,
                            const TwoQubitState& state,
                            std::size_t grid_resolution) {
  if (!state.dense) {
    throw DomainError("quantum_value_oracle needs the dense state form");
  }
  if (grid_resolution == 0) throw DomainError("grid resolution must be > 0");
  if (b.size() != static_cast<std::size_t>(f.n())) {
    throw DomainError("direction set size does not match functional");
  }
  const Mat4c& rho = *state.dense;
  const std::size_t n = b.size();
  const double scale = f.family() == Family::Linear ? 1.0 / n : 1.0;

  // Bob terms paired with each Alice setting: (bob index, sign).
  std::vector<std::vector<std::pair<std::size_t, double>>> terms(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (f.family() == Family::Linear) {
      terms[i] = {{i, 1.0}};
    } else if (i == 0) {
      terms[i] = {{0, 1.0}, {n - 1, -1.0}};
    } else {
      terms[i] = {{i - 1, 1.0}, {i, 1.0}};
    }
  }

  const auto grid = fibonacci_sphere(grid_resolution);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    // w_k = sum_terms sign * Tr(rho sigma_k x (b.sigma)), so that the
    // setting's value at Alice axis a is a . w.
    Vec3 w = Vec3::Zero();
    for (const auto& [j, sign] : terms[i]) {
      const auto bob = pauli::along(b[j].vec());
      for (int k = 0; k < 3; ++k)
        w(k) += sign * (rho * pauli::kron(pauli::sigma(k), bob)).trace().real();
    }
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& a : grid) best = std::max(best, a.dot(w));
    total += scale * best;
  }
  return total;
}

double visibility_value(std::span<const Vec3> m, const TwoQubitState& state,
                        Strategy strategy) {
  double q = 0.0;
  for (const auto& v : m) {
    double term = (state.T * v).norm();
    if (strategy == Strategy::General)
      term = std::max(term, std::abs(state.rB.dot(v)));
    q += term;
  }
  if (q == 0.0) return std::numeric_limits<double>::infinity();
  return lhs_bound_value(m) / q;
}

EvalReport evaluate(const SteeringFunctional& f, const DirectionSet& b,
                    const StateFamily& family, Strategy strategy) {
  auto bound = lhs_bound(f, b);
  auto q = quantum_value(f, b, family.at(1.0), strategy);
  if (!(q.value > 0.0)) {
    throw DegenerateError("quantum value is zero; visibility undefined");
  }
  return {bound.value, q.value, bound.value / q.value, std::move(bound.argmax),
          std::move(q.alice_axes)};
}

}  // namespace steer
