#include "steer/states.hpp"

#include <Eigen/Eigenvalues>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "steer/error.hpp"

namespace steer {

namespace {

using C = std::complex<double>;

constexpr double kHermitianTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kEigenFloor = -1e-10;

void require_visibility(double visibility) {
  if (!(visibility >= 0.0 && visibility <= 1.0)) {
    std::ostringstream msg;
    msg << "noise parameter V = " << visibility << " outside [0, 1]";
    throw DomainError(msg.str());
  }
}

void require_theta(double theta) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi / 2.0)) {
    std::ostringstream msg;
    msg << "theta = " << theta << " outside [0, pi/2]";
    throw DomainError(msg.str());
  }
}

Mat4c mix_with_white_noise(const Eigen::Vector4cd& psi, double visibility) {
  return visibility * (psi * psi.adjoint()) +
         ((1.0 - visibility) / 4.0) * Mat4c::Identity();
}

}  // namespace

namespace pauli {

const Eigen::Matrix2cd& sigma(int index) {
  static const std::array<Eigen::Matrix2cd, 3> kPaulis = [] {
    std::array<Eigen::Matrix2cd, 3> p;
    p[0] << C(0, 0), C(1, 0), C(1, 0), C(0, 0);
    p[1] << C(0, 0), C(0, -1), C(0, 1), C(0, 0);
    p[2] << C(1, 0), C(0, 0), C(0, 0), C(-1, 0);
    return p;
  }();
  return kPaulis.at(static_cast<std::size_t>(index));
}

Eigen::Matrix2cd along(const Vec3& v) {
  return v.x() * sigma(0) + v.y() * sigma(1) + v.z() * sigma(2);
}

Mat4c kron(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  Mat4c out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

}  // namespace pauli

Mat4c TwoQubitState::to_dense() const {
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  Mat4c rho = Mat4c::Identity();
  for (int i = 0; i < 3; ++i) {
    rho += rA(i) * pauli::kron(pauli::sigma(i), id);
    rho += rB(i) * pauli::kron(id, pauli::sigma(i));
    for (int j = 0; j < 3; ++j)
      rho += T(i, j) * pauli::kron(pauli::sigma(i), pauli::sigma(j));
  }
  return rho / 4.0;
}

StateFamily StateFamily::werner() { return {StateKind::Werner, 0.0}; }

StateFamily StateFamily::generalized_werner(double theta) {
  require_theta(theta);
  return {StateKind::GeneralizedWerner, theta};
}

TwoQubitState StateFamily::at(double visibility) const {
  return kind_ == StateKind::Werner ? make_werner(visibility)
                                    : make_generalized_werner(visibility, theta_);
}

bool StateFamily::rotation_covariant() const {
  // At theta = pi/4, T = diag(1, -1, 1) is orthogonal and rB = 0.
  return kind_ == StateKind::Werner || theta_ == std::numbers::pi / 4.0;
}

TwoQubitState make_werner(double visibility) {
  require_visibility(visibility);
  TwoQubitState state;
  state.T = -visibility * Mat3::Identity();
  // Singlet (|01> - |10>)/sqrt2 in the basis |00>, |01>, |10>, |11>.
  Eigen::Vector4cd psi(0.0, 1.0, -1.0, 0.0);
  psi /= std::sqrt(2.0);
  state.dense = mix_with_white_noise(psi, visibility);
  return state;
}

TwoQubitState make_generalized_werner(double visibility, double theta) {
  require_visibility(visibility);
  require_theta(theta);
  const double s2 = std::sin(2.0 * theta);
  const double c2 = std::cos(2.0 * theta);
  TwoQubitState state;
  state.rA = Vec3(0.0, 0.0, visibility * c2);
  state.rB = state.rA;
  state.T = (visibility * Vec3(s2, -s2, 1.0)).asDiagonal();
  Eigen::Vector4cd psi(std::cos(theta), 0.0, 0.0, std::sin(theta));
  state.dense = mix_with_white_noise(psi, visibility);
  return state;
}

TwoQubitState bloch_from_density(const Mat4c& dense) {
  if ((dense - dense.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol) {
    throw ValidationError("density matrix is not Hermitian");
  }
  const C trace = dense.trace();
  if (std::abs(trace - C(1.0, 0.0)) > kTraceTol) {
    std::ostringstream msg;
    msg << "density matrix trace " << trace.real() << " != 1";
    throw ValidationError(msg.str());
  }
  Eigen::SelfAdjointEigenSolver<Mat4c> eig(dense, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < kEigenFloor) {
    std::ostringstream msg;
    msg << "density matrix has negative eigenvalue "
        << eig.eigenvalues().minCoeff();
    throw ValidationError(msg.str());
  }

  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  auto expect = [&](const Mat4c& op) { return (dense * op).trace().real(); };
  TwoQubitState state;
  for (int i = 0; i < 3; ++i) {
    state.rA(i) = expect(pauli::kron(pauli::sigma(i), id));
    state.rB(i) = expect(pauli::kron(id, pauli::sigma(i)));
    for (int j = 0; j < 3; ++j)
      state.T(i, j) = expect(pauli::kron(pauli::sigma(i), pauli::sigma(j)));
  }
  state.dense = dense;
  return state;
}

}  // namespace steer
