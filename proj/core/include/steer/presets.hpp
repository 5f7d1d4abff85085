#pragma once

#include <string>
#include <vector>

#include "steer/functionals.hpp"

namespace steer::presets {

/// Platonic-solid axes for the linear family, n in {2, 3, 4, 6, 10}.
/// n = 6 and n = 10 are oriented with one vertex on +z.
DirectionSet platonic(int n);

/// Chained reference axes b_i = (sin((2i-1)pi/2n), 0, cos((2i-1)pi/2n)).
DirectionSet chained_reference(int n);

/// Published optimized chained sets (decimal constants, renormalized).
DirectionSet optimized_n4();
DirectionSet optimized_n6();
DirectionSet optimized_n10();

/// Worked n = 4 example given in spherical angles.
DirectionSet worked_example_n4();

/// Resolves "platonic-N", "chained-eq6-N", "paper-eq15", "paper-eq17",
/// "paper-eq18-0", "paper-sec3a". Throws DomainError on unknown names.
DirectionSet by_name(const std::string& name);

std::vector<std::string> names();

}  // namespace steer::presets
