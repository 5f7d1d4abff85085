#pragma once

#include <Eigen/Core>
#include <cstddef>
#include <vector>

namespace steer {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Measurement axis on the Bloch sphere. Always unit norm (to 1e-12).
class UnitVector3 {
 public:
  /// Tolerance on |v| - 1 below which inputs are silently renormalized.
  static constexpr double kRenormTolerance = 1e-6;

  UnitVector3() : v_(0.0, 0.0, 1.0) {}
  UnitVector3(double x, double y, double z);
  explicit UnitVector3(const Vec3& v);

  /// (sin t cos p, sin t sin p, cos t). Any real angles are accepted.
  static UnitVector3 from_angles(double theta, double phi);
  /// Normalizes an arbitrary nonzero vector.
  static UnitVector3 normalized(const Vec3& v);

  double x() const { return v_.x(); }
  double y() const { return v_.y(); }
  double z() const { return v_.z(); }
  const Vec3& vec() const { return v_; }

  /// Canonical polar angle in [0, pi].
  double theta() const;
  /// Canonical azimuth in [0, 2 pi).
  double phi() const;

  friend bool operator==(const UnitVector3& a, const UnitVector3& b) {
    return a.v_ == b.v_;
  }

 private:
  struct Trusted {};
  UnitVector3(const Vec3& v, Trusted) : v_(v) {}
  Vec3 v_;
};

/// First `count` points of the Fibonacci (golden-angle) lattice on S^2.
std::vector<Vec3> fibonacci_sphere(std::size_t count);

/// Rotation taking unit vector `from` onto unit vector `to`.
Mat3 rotation_between(const Vec3& from, const Vec3& to);

}  // namespace steer
