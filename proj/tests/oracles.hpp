#pragma once

// Test-only reference computations. Nothing here calls into the code paths
// it is used to check: Pauli algebra is rebuilt from scratch and maxima are
// taken by brute force.

#include <Eigen/Dense>
#include <complex>
#include <random>
#include <vector>

#include "steer/functionals.hpp"

namespace oracle {

using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;

Mat2 pauli(int k);
Mat4 kron(const Mat2& a, const Mat2& b);

/// Tr(rho sigma_i x sigma_j), indices in {0, 1, 2, 3} with 0 = identity.
double pauli_expectation(const Mat4& rho, int i, int j);

/// |psi><psi| for a 4-component amplitude vector.
Mat4 projector(const Eigen::Vector4cd& psi);

/// Largest eigenvalue of v.sigma (2x2 eigen-solve).
double top_eigenvalue(const Eigen::Vector3d& v);

/// Exact LHS bound by enumerating all 2^n signs, via 2x2 eigenvalues of
/// the Bob operator sum_j c_j b_j.sigma.
double lhs_bound_by_eigenvalues(const steer::SteeringFunctional& f,
                                const steer::DirectionSet& b);

/// Helpers for randomized property tests.
steer::UnitVector3 random_axis(std::mt19937_64& rng);
steer::DirectionSet random_directions(std::mt19937_64& rng, int n);
Eigen::Matrix3d random_rotation(std::mt19937_64& rng);

}  // namespace oracle
