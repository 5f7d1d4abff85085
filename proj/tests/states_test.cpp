#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "steer/error.hpp"
#include "steer/states.hpp"

using namespace steer;
using std::numbers::pi;

namespace {

// Bloch fields recomputed from the dense matrix with the oracle's Paulis.
void expect_consistent(const TwoQubitState& s, double tol = 1e-12) {
  ASSERT_TRUE(s.dense.has_value());
  for (int i = 0; i < 3; ++i) {
    EXPECT_NEAR(s.rA(i), oracle::pauli_expectation(*s.dense, i + 1, 0), tol);
    EXPECT_NEAR(s.rB(i), oracle::pauli_expectation(*s.dense, 0, i + 1), tol);
    for (int j = 0; j < 3; ++j)
      EXPECT_NEAR(s.T(i, j), oracle::pauli_expectation(*s.dense, i + 1, j + 1), tol);
  }
}

oracle::Mat4 singlet_projector() {
  Eigen::Vector4cd psi(0, 1, -1, 0);
  return oracle::projector(psi / std::sqrt(2.0));
}

}  // namespace

TEST(UnitVector3, RenormalizesNearUnitInput) {
  UnitVector3 v(0.6, 0.8, 1e-7);
  EXPECT_NEAR(v.vec().norm(), 1.0, 1e-12);
}

TEST(UnitVector3, RejectsFarFromUnit) {
  EXPECT_THROW(UnitVector3(1.0, 1.0, 0.0), DomainError);
  EXPECT_THROW(UnitVector3(0.0, 0.0, 0.0), DomainError);
}

TEST(UnitVector3, AnglesRoundTrip) {
  const auto v = UnitVector3::from_angles(2.1, 4.0);
  const auto w = UnitVector3::from_angles(v.theta(), v.phi());
  EXPECT_NEAR((v.vec() - w.vec()).norm(), 0.0, 1e-14);
  EXPECT_GE(v.phi(), 0.0);
  EXPECT_LT(v.phi(), 2 * pi);
}

TEST(Werner, MaximallyMixedAtZero) {
  const auto s = make_werner(0.0);
  EXPECT_TRUE(s.T.isZero(0.0));
  EXPECT_TRUE(s.rA.isZero(0.0));
  EXPECT_TRUE(s.rB.isZero(0.0));
  expect_consistent(s);
}

TEST(Werner, SingletCorrelations) {
  const auto s = make_werner(1.0);
  EXPECT_TRUE(s.T.isApprox(-Mat3::Identity()));
  // Oracle: singlet traces computed independently.
  const auto rho = singlet_projector();
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      EXPECT_NEAR(oracle::pauli_expectation(rho, i, j), i == j ? -1.0 : 0.0, 1e-15);
  expect_consistent(s);
}

TEST(Werner, HalfNoiseSpectrum) {
  const auto s = make_werner(0.5);
  EXPECT_TRUE(s.T.isApprox(-0.5 * Mat3::Identity()));
  Eigen::SelfAdjointEigenSolver<Mat4c> eig(*s.dense);
  const Eigen::Vector4d ev = eig.eigenvalues();  // ascending
  EXPECT_NEAR(ev(0), 0.125, 1e-14);
  EXPECT_NEAR(ev(1), 0.125, 1e-14);
  EXPECT_NEAR(ev(2), 0.125, 1e-14);
  EXPECT_NEAR(ev(3), 0.625, 1e-14);
}

TEST(Werner, RejectsOutOfRangeNoise) {
  EXPECT_THROW(make_werner(-0.01), DomainError);
  EXPECT_THROW(make_werner(1.01), DomainError);
  EXPECT_THROW(make_werner(std::nan("")), DomainError);
}

TEST(GeneralizedWerner, MaximallyEntangledPoint) {
  const auto s = make_generalized_werner(1.0, pi / 4);
  EXPECT_NEAR((s.T - Vec3(1, -1, 1).asDiagonal().toDenseMatrix()).norm(), 0.0, 1e-15);
  EXPECT_NEAR(s.rB.norm(), 0.0, 1e-15);
  expect_consistent(s);
}

TEST(GeneralizedWerner, ProductStateAtZero) {
  const auto s = make_generalized_werner(1.0, 0.0);
  EXPECT_TRUE(s.T.isApprox(Vec3(0, 0, 1).asDiagonal().toDenseMatrix()));
  EXPECT_TRUE(s.rB.isApprox(Vec3::UnitZ()));
  expect_consistent(s);
}

TEST(GeneralizedWerner, IntermediatePoint) {
  const auto s = make_generalized_werner(0.6, pi / 6);
  const double a = 0.6 * std::sin(pi / 3);
  EXPECT_NEAR(s.T(0, 0), a, 1e-15);
  EXPECT_NEAR(s.T(1, 1), -a, 1e-15);
  EXPECT_NEAR(s.T(2, 2), 0.6, 1e-15);
  EXPECT_NEAR(s.rB.z(), 0.3, 1e-15);
  expect_consistent(s);
}

TEST(GeneralizedWerner, RejectsThetaOutsideQuarterTurn) {
  EXPECT_THROW(make_generalized_werner(1.0, -1e-3), DomainError);
  EXPECT_THROW(make_generalized_werner(1.0, pi / 2 + 1e-9), DomainError);
  EXPECT_THROW(StateFamily::generalized_werner(2.0), DomainError);
}

TEST(BlochFromDensity, MaximallyMixed) {
  const auto s = bloch_from_density(Mat4c::Identity() / 4.0);
  EXPECT_TRUE(s.T.isZero(1e-15));
  EXPECT_TRUE(s.rA.isZero(1e-15));
  EXPECT_TRUE(s.rB.isZero(1e-15));
}

TEST(BlochFromDensity, SingletProjector) {
  const auto s = bloch_from_density(singlet_projector());
  EXPECT_NEAR((s.T + Mat3::Identity()).norm(), 0.0, 1e-14);
}

TEST(BlochFromDensity, RejectsInvalidMatrices) {
  Mat4c not_hermitian = Mat4c::Identity() / 4.0;
  not_hermitian(0, 1) = 0.1;
  EXPECT_THROW(bloch_from_density(not_hermitian), ValidationError);
  EXPECT_THROW(bloch_from_density(Mat4c::Identity() / 2.0), ValidationError);
  Mat4c negative = Mat4c::Zero();
  negative(0, 0) = 1.5;
  negative(1, 1) = -0.5;
  EXPECT_THROW(bloch_from_density(negative), ValidationError);
}

TEST(StateProperties, RoundTripThroughDenseForm) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double v = u(rng);
    const double theta = u(rng) * pi / 2;
    const auto s = make_generalized_werner(v, theta);
    const auto back = bloch_from_density(*s.dense);
    EXPECT_NEAR((back.T - s.T).norm(), 0.0, 1e-12);
    EXPECT_NEAR((back.rA - s.rA).norm(), 0.0, 1e-12);
    EXPECT_NEAR((back.rB - s.rB).norm(), 0.0, 1e-12);
    EXPECT_NEAR((s.to_dense() - *s.dense).norm(), 0.0, 1e-12);
  }
  const auto w = make_generalized_werner(0.7, 0.3);
  expect_consistent(bloch_from_density(*w.dense));
}

TEST(StateProperties, BlochFieldsLinearInNoise) {
  for (double theta : {0.0, 0.2, pi / 4, 1.3}) {
    const auto unit = make_generalized_werner(1.0, theta);
    for (double v : {0.0, 0.25, 0.5, 0.9}) {
      const auto s = make_generalized_werner(v, theta);
      EXPECT_EQ(s.T, (v * unit.T).eval());
      EXPECT_EQ(s.rB, (v * unit.rB).eval());
      EXPECT_EQ(make_werner(v).T, (v * make_werner(1.0).T).eval());
    }
  }
}

TEST(StateProperties, ThetaReflection) {
  for (double theta : {0.05, 0.3, 0.6, 0.75}) {
    const auto a = make_generalized_werner(1.0, theta);
    const auto b = make_generalized_werner(1.0, pi / 2 - theta);
    EXPECT_NEAR((a.T - b.T).norm(), 0.0, 1e-15);
    EXPECT_NEAR((a.rB + b.rB).norm(), 0.0, 1e-15);
  }
}

TEST(StateProperties, PhysicalBounds) {
  for (double theta : {0.0, 0.4, pi / 4}) {
    const auto s = make_generalized_werner(1.0, theta);
    Eigen::JacobiSVD<Mat3> svd(s.T);
    EXPECT_LE(svd.singularValues().maxCoeff(), 1.0 + 1e-10);
    EXPECT_LE(s.rB.norm(), 1.0 + 1e-10);
    Eigen::SelfAdjointEigenSolver<Mat4c> eig(*s.dense);
    EXPECT_GE(eig.eigenvalues().minCoeff(), -1e-10);
  }
}
