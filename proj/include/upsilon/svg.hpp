#pragma once

#include <string>

#include "upsilon/tiling.hpp"

namespace upsilon {

/// SVG 1.1 drawing of a verified planar tiling over its p x p window. Each
/// tile's cells share a fill colour; codeword cells carry a dot. Throws
/// PreconditionError when n != 2 or the input does not verify.
std::string render_svg(const PeriodicTiling& tiling, int cell_px = 24);

}  // namespace upsilon
