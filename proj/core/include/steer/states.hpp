#pragma once

#include <Eigen/Core>
#include <complex>
#include <optional>

#include "steer/sphere.hpp"

namespace steer {

using Mat4c = Eigen::Matrix4cd;

/// Two-qubit state in Bloch form: rho = (I + rA.sigma x I + I x rB.sigma
/// + sum T_ij sigma_i x sigma_j) / 4. Alice is the first tensor factor.
///
/// The dense 4x4 matrix is optional and only consumed by the oracles; every
/// evaluation formula reads rB and T.
struct TwoQubitState {
  Vec3 rA = Vec3::Zero();
  Vec3 rB = Vec3::Zero();
  Mat3 T = Mat3::Zero();
  std::optional<Mat4c> dense;

  /// Rebuilds the dense matrix from the Bloch fields.
  Mat4c to_dense() const;
};

enum class StateKind { Werner, GeneralizedWerner };

/// Werner (singlet + white noise) or generalized Werner
/// (cos t|00> + sin t|11> + white noise) family.
class StateFamily {
 public:
  static StateFamily werner();
  /// Throws DomainError unless theta is in [0, pi/2].
  static StateFamily generalized_werner(double theta);

  StateKind kind() const { return kind_; }
  /// Zero for the Werner family.
  double theta() const { return theta_; }

  /// Family member with noise parameter V in [0, 1].
  TwoQubitState at(double visibility) const;

  /// True when Q is invariant under every global rotation of Bob's axes.
  bool rotation_covariant() const;

 private:
  StateFamily(StateKind kind, double theta) : kind_(kind), theta_(theta) {}
  StateKind kind_;
  double theta_;
};

TwoQubitState make_werner(double visibility);
TwoQubitState make_generalized_werner(double visibility, double theta);

/// Validates `dense` (Hermitian, unit trace, PSD) and extracts the Bloch
/// fields. The returned state keeps the dense form.
TwoQubitState bloch_from_density(const Mat4c& dense);

namespace pauli {
/// sigma_x, sigma_y, sigma_z for index 0, 1, 2.
const Eigen::Matrix2cd& sigma(int index);
/// v.sigma for a real 3-vector.
Eigen::Matrix2cd along(const Vec3& v);
/// Kronecker product of two 2x2 matrices (Alice factor first).
Mat4c kron(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b);
}  // namespace pauli

}  // namespace steer
