#pragma once

#include <string>

#include "specvar/figures.hpp"

namespace specvar {

/// Maps the unit disk into a 1000x1000 viewBox: x = 500 + 450 Re z,
/// y = 500 - 450 Im z. Blue circles are Euclidean disks, red circles
/// hyperbolic ones, crosses mark sigma(A) and dots sigma(B). Vacuous disks
/// are dashed; zero-radius disks are drawn as small filled points.
std::string render_svg(const LocalizationScene& scene);

}  // namespace specvar
