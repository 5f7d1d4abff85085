#include "steer/presets.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "steer/error.hpp"

namespace steer::presets {

namespace {

using std::numbers::pi;

DirectionSet from_rows(std::initializer_list<std::array<double, 3>> rows) {
  std::vector<UnitVector3> dirs;
  for (const auto& r : rows) dirs.emplace_back(r[0], r[1], r[2]);
  return DirectionSet(std::move(dirs));
}

// One representative per antipodal pair, rotated so `pole` lands on +z.
DirectionSet axes_with_pole(const std::vector<Vec3>& axes, const Vec3& pole) {
  const Mat3 rot = rotation_between(pole.normalized(), Vec3::UnitZ());
  std::vector<UnitVector3> dirs;
  for (const auto& a : axes) {
    Vec3 v = rot * a.normalized();
    if (std::abs(v.z()) < 1e-12 ? v.y() < 0.0 : v.z() < 0.0) v = -v;
    dirs.push_back(UnitVector3::normalized(v));
  }
  return DirectionSet(std::move(dirs));
}

DirectionSet icosahedron_axes() {
  const double g = std::numbers::phi;
  const std::vector<Vec3> axes = {
      {0, 1, g}, {0, -1, g}, {1, g, 0}, {-1, g, 0}, {g, 0, 1}, {g, 0, -1}};
  return axes_with_pole(axes, axes[0]);
}

DirectionSet dodecahedron_axes() {
  const double g = std::numbers::phi;
  const double ig = 1.0 / g;
  const std::vector<Vec3> axes = {
      {1, 1, 1},   {1, 1, -1},  {1, -1, 1}, {1, -1, -1}, {0, ig, g},
      {0, ig, -g}, {ig, g, 0},  {ig, -g, 0}, {g, 0, ig},  {g, 0, -ig}};
  return axes_with_pole(axes, axes[0]);
}

}  // namespace

DirectionSet platonic(int n) {
  const double r3 = 1.0 / std::sqrt(3.0);
  switch (n) {
    case 2:
      return from_rows({{1, 0, 0}, {0, 0, 1}});
    case 3:
      return from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    case 4:
      return from_rows(
          {{r3, r3, r3}, {r3, -r3, -r3}, {-r3, r3, -r3}, {-r3, -r3, r3}});
    case 6:
      return icosahedron_axes();
    case 10:
      return dodecahedron_axes();
    default:
      throw DomainError("no Platonic direction set for n = " +
                        std::to_string(n));
  }
}

DirectionSet chained_reference(int n) {
  if (n < 2) throw DomainError("chained reference set needs n >= 2");
  std::vector<UnitVector3> dirs;
  for (int i = 1; i <= n; ++i) {
    const double angle = (2.0 * i - 1.0) * pi / (2.0 * n);
    dirs.push_back(UnitVector3::from_angles(angle, 0.0));
  }
  return DirectionSet(std::move(dirs));
}

DirectionSet optimized_n4() {
  return from_rows({{0.387712, 0.325511, 0.862393},
                    {0.662244, 0.014395, -0.74915},
                    {-0.393555, -0.764746, 0.510174},
                    {0.256293, 0.92029, 0.295602}});
}

DirectionSet optimized_n6() {
  return from_rows({{-0.40343, -0.594926, -0.695203},
                    {0.786331, -0.613429, 0.073405},
                    {0.39261, 0.6444655, 0.656141},
                    {-0.445744, -0.539581, 0.714258},
                    {0.795316, -0.595208, 0.114891},
                    {0.435205, 0.494333, -0.752484}});
}

DirectionSet optimized_n10() {
  return from_rows({{-0.236305, -0.475636, 0.847308},
                    {-0.858832, 0.00901434, 0.512178},
                    {0.320136, 0.687104, 0.652228},
                    {-0.137947, 0.990267, -0.0185065},
                    {0.774103, 0.422827, -0.47115},
                    {0.637737, 0.18577, 0.747517},
                    {0.0326946, 0.0548708, 0.997958},
                    {0.829632, -0.326344, -0.453001},
                    {0.723801, -0.672939, 0.152531},
                    {-0.296751, -0.478204, 0.826595}});
}

DirectionSet worked_example_n4() {
  return DirectionSet({UnitVector3::from_angles(5 * pi / 4, pi / 3),
                       UnitVector3::from_angles(0.0, 11 * pi / 6),
                       UnitVector3::from_angles(3 * pi / 5, 3 * pi / 4),
                       UnitVector3::from_angles(3 * pi / 2, pi / 2)});
}

DirectionSet by_name(const std::string& name) {
  auto suffix_int = [&](const std::string& prefix) -> int {
    const std::string tail = name.substr(prefix.size());
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(tail, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tail.size())
      throw DomainError("malformed preset name '" + name + "'");
    return value;
  };
  if (name.rfind("platonic-", 0) == 0) return platonic(suffix_int("platonic-"));
  if (name.rfind("chained-eq6-", 0) == 0)
    return chained_reference(suffix_int("chained-eq6-"));
  if (name == "paper-eq15") return optimized_n4();
  if (name == "paper-eq17") return optimized_n6();
  if (name == "paper-eq18-0") return optimized_n10();
  if (name == "paper-sec3a") return worked_example_n4();
  throw DomainError("unknown preset '" + name + "'");
}

std::vector<std::string> names() {
  return {"platonic-2",   "platonic-3",   "platonic-4",  "platonic-6",
          "platonic-10",  "chained-eq6-N", "paper-eq15", "paper-eq17",
          "paper-eq18-0", "paper-sec3a"};
}

}  // namespace steer::presets
