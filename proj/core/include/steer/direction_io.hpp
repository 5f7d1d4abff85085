#pragma once

#include <filesystem>
#include <string>

#include "steer/functionals.hpp"

namespace steer {

/// Parses {"n": int, "directions": [[x, y, z], ...]}. Rows within 1e-6 of
/// unit norm are renormalized; anything else raises ValidationError.
DirectionSet parse_direction_set(const std::string& json_text);

DirectionSet load_direction_set(const std::filesystem::path& path);

/// Serializes with 17 significant digits.
std::string direction_set_to_json(const DirectionSet& b, int indent = 2);

/// Inline form "x,y,z;x,y,z;...".
DirectionSet parse_inline_directions(const std::string& text);

}  // namespace steer
