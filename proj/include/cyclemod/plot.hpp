#pragma once

#include <string>

#include "cyclemod/seedgen.hpp"

namespace cyclemod {

inline constexpr int kPlotWidth = 800;
inline constexpr int kPlotHeight = 400;

// Residue map: d_k against k as an SVG scatter with a connecting line, axes,
// and tick labels at the ends and midpoints of both ranges. Identical input
// yields identical bytes.
std::string render_residue_map(const SeedSequence& seq);

}  // namespace cyclemod
