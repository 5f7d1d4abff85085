#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "steer/functionals.hpp"
#include "steer/states.hpp"

namespace steer {

/// How Alice may answer. General also allows constant (deterministic)
/// outputs, which win when Bob's marginal is biased along m.
enum class Strategy { General, ProjectiveOnly };

std::string to_string(Strategy strategy);
Strategy parse_strategy(const std::string& text);

struct TermValue {
  double value;
  /// Maximizing projective axis T.m / |T.m|; +z when T.m = 0.
  UnitVector3 alice_axis;
  /// The constant-output branch |rB.m| won (General only).
  bool constant_output;
};

/// max over Alice's answer of <A (m.sigma_B)>.
TermValue term_value(const Vec3& m, const TwoQubitState& state,
                     Strategy strategy);

struct QuantumValue {
  double value;
  std::vector<UnitVector3> alice_axes;
};

/// Sum of term values over Alice settings, summed in index order.
QuantumValue quantum_value(const SteeringFunctional& f, const DirectionSet& b,
                           const TwoQubitState& state,
                           Strategy strategy = Strategy::General);

/// Grid maximization over `grid_resolution` Fibonacci axes per Alice
/// setting, with correlators computed as dense traces. Needs state.dense.
double quantum_value_oracle(const SteeringFunctional& f, const DirectionSet& b,
                            const TwoQubitState& state,
                            std::size_t grid_resolution);

struct EvalReport {
  double lhs_bound;
  double quantum_value;
  /// lhs_bound / quantum_value: noise threshold above which the family
  /// violates the inequality.
  double visibility;
  SignAssignment argmax_signs;
  std::vector<UnitVector3> alice_axes;
};

/// Bound, quantum value at family noise V = 1 and visibility.
/// Throws DegenerateError when Q = 0.
EvalReport evaluate(const SteeringFunctional& f, const DirectionSet& b,
                    const StateFamily& family,
                    Strategy strategy = Strategy::General);

/// Visibility only, from precomputed group vectors; +inf when Q = 0.
double visibility_value(std::span<const Vec3> group_vectors,
                        const TwoQubitState& state, Strategy strategy);

}  // namespace steer
