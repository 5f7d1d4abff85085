#include "steer/direction_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "steer/error.hpp"

namespace steer {

using nlohmann::json;

namespace {

UnitVector3 checked_axis(const Vec3& v, std::size_t row) {
  try {
    return UnitVector3(v);
  } catch (const DomainError& e) {
    throw ValidationError("direction " + std::to_string(row) + ": " + e.what());
  }
}

}  // namespace

DirectionSet parse_direction_set(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("direction set JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("directions") ||
      !doc["directions"].is_array())
    throw ValidationError("direction set JSON needs a \"directions\" array");

  std::vector<UnitVector3> dirs;
  const auto& rows = doc["directions"];
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || row.size() != 3 || !row[0].is_number() ||
        !row[1].is_number() || !row[2].is_number())
      throw ValidationError("direction " + std::to_string(i) +
                            " must be an array of three numbers");
    dirs.push_back(checked_axis(
        Vec3(row[0].get<double>(), row[1].get<double>(), row[2].get<double>()), i));
  }
  if (doc.contains("n")) {
    if (!doc["n"].is_number_integer() ||
        doc["n"].get<long long>() != static_cast<long long>(dirs.size()))
      throw ValidationError("\"n\" does not match the number of directions");
  }
  if (dirs.size() < 2) throw ValidationError("direction set needs >= 2 axes");
  return DirectionSet(std::move(dirs));
}

DirectionSet load_direction_set(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open direction file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_direction_set(buf.str());
}

std::string direction_set_to_json(const DirectionSet& b, int indent) {
  // nlohmann emits shortest round-trip doubles, which preserves all 17 digits.
  json doc;
  doc["n"] = b.size();
  json rows = json::array();
  for (const auto& d : b) rows.push_back({d.x(), d.y(), d.z()});
  doc["directions"] = rows;
  return doc.dump(indent);
}

DirectionSet parse_inline_directions(const std::string& text) {
  std::vector<UnitVector3> dirs;
  std::stringstream rows(text);
  std::string row;
  std::size_t index = 0;
  while (std::getline(rows, row, ';')) {
    if (row.find_first_not_of(" \t") == std::string::npos) continue;
    std::stringstream cells(row);
    std::string cell;
    std::vector<double> xyz;
    while (std::getline(cells, cell, ',')) {
      try {
        std::size_t used = 0;
        xyz.push_back(std::stod(cell, &used));
        if (cell.find_first_not_of(" \t", used) != std::string::npos)
          throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        throw ValidationError("bad number '" + cell + "' in inline directions");
      }
    }
    if (xyz.size() != 3)
      throw ValidationError("inline direction " + std::to_string(index) +
                            " needs three components");
    dirs.push_back(checked_axis(Vec3(xyz[0], xyz[1], xyz[2]), index));
    ++index;
  }
  if (dirs.size() < 2) throw ValidationError("direction set needs >= 2 axes");
  return DirectionSet(std::move(dirs));
}

}  // namespace steer
