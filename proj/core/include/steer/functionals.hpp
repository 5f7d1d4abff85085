#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "steer/sphere.hpp"

namespace steer {

enum class Family { Linear, Chained };

std::string to_string(Family family);
/// Accepts "linear" / "chained" (case-insensitive). Throws DomainError.
Family parse_family(const std::string& text);

/// One member of the linear or chained family of n-setting inequalities.
class SteeringFunctional {
 public:
  /// Throws DomainError for n < 2.
  SteeringFunctional(Family family, int n);

  Family family() const { return family_; }
  int n() const { return n_; }

  friend bool operator==(const SteeringFunctional&,
                         const SteeringFunctional&) = default;

 private:
  Family family_;
  int n_;
};

/// Ordered list of Bob's measurement axes (at least two).
class DirectionSet {
 public:
  explicit DirectionSet(std::vector<UnitVector3> directions);

  std::size_t size() const { return directions_.size(); }
  const UnitVector3& operator[](std::size_t i) const { return directions_[i]; }
  const std::vector<UnitVector3>& directions() const { return directions_; }
  auto begin() const { return directions_.begin(); }
  auto end() const { return directions_.end(); }

  /// Global rotation R.b_i of every axis.
  DirectionSet rotated(const Mat3& rotation) const;

  /// True if two axes are parallel or antipodal within `tol` (1 - |cos|).
  bool is_degenerate(double tol = 1e-9) const;

 private:
  std::vector<UnitVector3> directions_;
};

/// Alice's deterministic declarations A_i in {+1, -1}.
class SignAssignment {
 public:
  explicit SignAssignment(std::vector<int> signs);
  static SignAssignment all_ones(std::size_t n);

  std::size_t size() const { return signs_.size(); }
  int operator[](std::size_t i) const { return signs_[i]; }
  const std::vector<int>& signs() const { return signs_; }
  SignAssignment negated() const;

  friend bool operator==(const SignAssignment&, const SignAssignment&) = default;

 private:
  std::vector<int> signs_;
};

/// Coefficient of each Bob axis once Alice's signs are fixed.
/// Linear: s_i / n. Chained: s_i + s_{i+1} (i < n), s_n - s_1.
std::vector<double> bob_coefficients(const SteeringFunctional& f,
                                     const SignAssignment& s);

/// Vector paired with each Alice setting.
/// Linear: b_i / n. Chained: m_1 = b_1 - b_n, m_i = b_{i-1} + b_i.
std::vector<Vec3> alice_group_vectors(const SteeringFunctional& f,
                                      const DirectionSet& b);

struct LhsBound {
  double value;
  SignAssignment argmax;
};

/// Largest supported n for exact enumeration.
inline constexpr int kMaxEnumerationN = 24;

/// Exact LHS bound max_s |sum_j c_j(s) b_j|. Enumerates 2^(n-1) sign
/// patterns with s_1 = +1. The argmax is the lexicographically smallest
/// maximizer with +1 ordered before -1.
LhsBound lhs_bound(const SteeringFunctional& f, const DirectionSet& b);

/// Value of lhs_bound only, via Gray-code enumeration over group vectors.
double lhs_bound_value(std::span<const Vec3> group_vectors);

/// Lower estimate of the LHS bound: maximizes sum_j c_j(s) (b_j . r) over
/// all sign patterns and `samples` Fibonacci-lattice Bob states r.
double lhs_bound_oracle(const SteeringFunctional& f, const DirectionSet& b,
                        std::size_t samples);

/// Value of the functional for deterministic signs and a fixed Bob state r.
double lhs_value(const SteeringFunctional& f, const DirectionSet& b,
                 const SignAssignment& s, const Vec3& bob_state);

}  // namespace steer
