#pragma once

#include <optional>
#include <string>

#include "vgit/fan.hpp"

namespace vgit {

// Deterministic SVG picture of a rank-2 fan: chambers as shaded sectors,
// walls as rays, the optional highlight character as a marked point.
// Byte-identical output for identical input. Throws UnsupportedRankError
// unless the character lattice has rank 2.
std::string render_fan_svg(const GitFan& fan,
                           const std::optional<Character>& highlight = {});

}  // namespace vgit
