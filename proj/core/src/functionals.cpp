#include "steer/functionals.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>

#include "steer/error.hpp"

namespace steer {

namespace {

void require_size(const SteeringFunctional& f, std::size_t size,
                  const char* what) {
  if (size != static_cast<std::size_t>(f.n())) {
    std::ostringstream msg;
    msg << what << " has " << size << " entries, functional expects " << f.n();
    throw DomainError(msg.str());
  }
}

void require_enumerable(std::size_t n) {
  if (n > static_cast<std::size_t>(kMaxEnumerationN)) {
    std::ostringstream msg;
    msg << "enumeration too large: n = " << n << " exceeds "
        << kMaxEnumerationN;
    throw EnumerationTooLarge(msg.str());
  }
}

// Sign pattern from a mask over s_2..s_n; bit k set means s_{k+2} = -1.
SignAssignment signs_from_mask(std::size_t n, std::uint32_t mask) {
  std::vector<int> s(n, 1);
  for (std::size_t k = 1; k < n; ++k)
    if (mask & (1u << (n - 1 - k))) s[k] = -1;
  return SignAssignment(std::move(s));
}

}  // namespace

std::string to_string(Family family) {
  return family == Family::Linear ? "linear" : "chained";
}

Family parse_family(const std::string& text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "linear") return Family::Linear;
  if (lower == "chained") return Family::Chained;
  throw DomainError("unknown family '" + text + "' (expected linear|chained)");
}

SteeringFunctional::SteeringFunctional(Family family, int n)
    : family_(family), n_(n) {
  if (n < 2) {
    throw DomainError("steering functional needs n >= 2, got " +
                      std::to_string(n));
  }
}

DirectionSet::DirectionSet(std::vector<UnitVector3> directions)
    : directions_(std::move(directions)) {
  if (directions_.size() < 2) {
    throw DomainError("direction set needs at least two axes");
  }
}

DirectionSet DirectionSet::rotated(const Mat3& rotation) const {
  std::vector<UnitVector3> out;
  out.reserve(directions_.size());
  for (const auto& d : directions_)
    out.push_back(UnitVector3::normalized(rotation * d.vec()));
  return DirectionSet(std::move(out));
}

bool DirectionSet::is_degenerate(double tol) const {
  for (std::size_t i = 0; i < directions_.size(); ++i)
    for (std::size_t j = i + 1; j < directions_.size(); ++j)
      if (1.0 - std::abs(directions_[i].vec().dot(directions_[j].vec())) < tol)
        return true;
  return false;
}

SignAssignment::SignAssignment(std::vector<int> signs)
    : signs_(std::move(signs)) {
  for (int s : signs_)
    if (s != 1 && s != -1)
      throw DomainError("sign assignment entries must be +1 or -1");
}

SignAssignment SignAssignment::all_ones(std::size_t n) {
  return SignAssignment(std::vector<int>(n, 1));
}

SignAssignment SignAssignment::negated() const {
  std::vector<int> out(signs_);
  for (int& s : out) s = -s;
  return SignAssignment(std::move(out));
}

std::vector<double> bob_coefficients(const SteeringFunctional& f,
                                     const SignAssignment& s) {
  require_size(f, s.size(), "sign assignment");
  const std::size_t n = s.size();
  std::vector<double> c(n);
  if (f.family() == Family::Linear) {
    for (std::size_t i = 0; i < n; ++i)
      c[i] = static_cast<double>(s[i]) / static_cast<double>(n);
  } else {
    for (std::size_t i = 0; i + 1 < n; ++i) c[i] = s[i] + s[i + 1];
    c[n - 1] = s[n - 1] - s[0];
  }
  return c;
}

std::vector<Vec3> alice_group_vectors(const SteeringFunctional& f,
                                      const DirectionSet& b) {
  require_size(f, b.size(), "direction set");
  const std::size_t n = b.size();
  std::vector<Vec3> m(n);
  if (f.family() == Family::Linear) {
    for (std::size_t i = 0; i < n; ++i)
      m[i] = b[i].vec() / static_cast<double>(n);
  } else {
    m[0] = b[0].vec() - b[n - 1].vec();
    for (std::size_t i = 1; i < n; ++i) m[i] = b[i - 1].vec() + b[i].vec();
  }
  return m;
}

double lhs_bound_value(std::span<const Vec3> m) {
  const std::size_t n = m.size();
  require_enumerable(n);
  Vec3 sum = Vec3::Zero();
  for (const auto& v : m) sum += v;
  double best = sum.squaredNorm();
  // Gray code over s_2..s_n; step k flips the sign of the lowest set bit.
  std::vector<signed char> sign(n, 1);
  const std::uint32_t steps = 1u << (n - 1);
  for (std::uint32_t k = 1; k < steps; ++k) {
    const std::size_t idx = 1 + static_cast<std::size_t>(std::countr_zero(k));
    sum -= (2.0 * sign[idx]) * m[idx];
    sign[idx] = static_cast<signed char>(-sign[idx]);
    best = std::max(best, sum.squaredNorm());
  }
  return std::sqrt(best);
}

LhsBound lhs_bound(const SteeringFunctional& f, const DirectionSet& b) {
  require_size(f, b.size(), "direction set");
  require_enumerable(b.size());
  const auto m = alice_group_vectors(f, b);
  const std::size_t n = m.size();
  const std::uint32_t patterns = 1u << (n - 1);

  std::vector<double> values(patterns);
  double best = 0.0;
  for (std::uint32_t mask = 0; mask < patterns; ++mask) {
    Vec3 sum = m[0];
    for (std::size_t k = 1; k < n; ++k)
      sum += (mask & (1u << (n - 1 - k))) ? Vec3(-m[k]) : m[k];
    values[mask] = sum.norm();
    best = std::max(best, values[mask]);
  }
  const double tie = 1e-12 * std::max(1.0, best);
  // Mask order equals lexicographic order of (s_2, ..., s_n) with +1 < -1.
  std::uint32_t argmax = 0;
  for (std::uint32_t mask = 0; mask < patterns; ++mask) {
    if (values[mask] >= best - tie) {
      argmax = mask;
      break;
    }
  }
  return {best, signs_from_mask(n, argmax)};
}

double lhs_value(const SteeringFunctional& f, const DirectionSet& b,
                 const SignAssignment& s, const Vec3& bob_state) {
  const auto c = bob_coefficients(f, s);
  require_size(f, b.size(), "direction set");
  double total = 0.0;
  for (std::size_t j = 0; j < c.size(); ++j)
    total += c[j] * b[j].vec().dot(bob_state);
  return total;
}

double lhs_bound_oracle(const SteeringFunctional& f, const DirectionSet& b,
                        std::size_t samples) {
  require_size(f, b.size(), "direction set");
  require_enumerable(b.size());
  if (samples == 0) throw DomainError("oracle needs at least one sample");
  const std::size_t n = b.size();
  const auto points = fibonacci_sphere(samples);

  double best = -std::numeric_limits<double>::infinity();
  const std::uint32_t patterns = 1u << n;
  for (std::uint32_t mask = 0; mask < patterns; ++mask) {
    std::vector<int> s(n);
    for (std::size_t k = 0; k < n; ++k) s[k] = (mask & (1u << k)) ? -1 : 1;
    const auto c = bob_coefficients(f, SignAssignment(std::move(s)));
    Vec3 w = Vec3::Zero();
    for (std::size_t j = 0; j < n; ++j) w += c[j] * b[j].vec();
    for (const auto& r : points) best = std::max(best, w.dot(r));
  }
  return best;
}

}  // namespace steer
