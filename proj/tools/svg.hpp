#pragma once

#include <string>
#include <vector>

#include "sweep.hpp"

namespace smhd::cli {

/// Self-contained SVG heatmap of a sweep: one rect per grid point, inline
/// styles, a legend, and optional polylines. The second line is a metadata
/// comment naming the verdict function.
std::string render_heatmap(const SweepSpec& spec, const std::vector<SweepPoint>& points,
                           const std::vector<Curve>& curves);

} // namespace smhd::cli
