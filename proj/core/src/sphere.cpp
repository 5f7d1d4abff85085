#include "steer/sphere.hpp"

#include <Eigen/Geometry>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "steer/error.hpp"

namespace steer {

UnitVector3::UnitVector3(double x, double y, double z)
    : UnitVector3(Vec3(x, y, z)) {}

UnitVector3::UnitVector3(const Vec3& v) {
  const double norm = v.norm();
  if (!std::isfinite(norm) || std::abs(norm - 1.0) > kRenormTolerance) {
    std::ostringstream msg;
    msg << "vector (" << v.x() << ", " << v.y() << ", " << v.z()
        << ") is not unit norm (|v| = " << norm << ")";
    throw DomainError(msg.str());
  }
  v_ = v / norm;
}

UnitVector3 UnitVector3::from_angles(double theta, double phi) {
  const double st = std::sin(theta);
  return UnitVector3(Vec3(st * std::cos(phi), st * std::sin(phi), std::cos(theta)),
                     Trusted{});
}

UnitVector3 UnitVector3::normalized(const Vec3& v) {
  const double norm = v.norm();
  if (!std::isfinite(norm) || norm == 0.0) {
    throw DomainError("cannot normalize a zero or non-finite vector");
  }
  return UnitVector3(Vec3(v / norm), Trusted{});
}

double UnitVector3::theta() const {
  return std::acos(std::clamp(v_.z(), -1.0, 1.0));
}

double UnitVector3::phi() const {
  double p = std::atan2(v_.y(), v_.x());
  if (p < 0.0) p += 2.0 * std::numbers::pi;
  if (p >= 2.0 * std::numbers::pi) p = 0.0;
  return p;
}

std::vector<Vec3> fibonacci_sphere(std::size_t count) {
  std::vector<Vec3> points;
  points.reserve(count);
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (std::size_t k = 0; k < count; ++k) {
    const double z = 1.0 - (2.0 * static_cast<double>(k) + 1.0) /
                               static_cast<double>(count);
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double angle = golden * static_cast<double>(k);
    points.emplace_back(rho * std::cos(angle), rho * std::sin(angle), z);
  }
  return points;
}

Mat3 rotation_between(const Vec3& from, const Vec3& to) {
  return Eigen::Quaterniond::FromTwoVectors(from, to).toRotationMatrix();
}

}  // namespace steer
