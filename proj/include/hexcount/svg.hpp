#pragma once

#include "hexcount/enumerator.hpp"
#include "hexcount/regions.hpp"

#include <optional>
#include <string>

namespace hexcount {

// Deterministic SVG: region outline, optional tiling with lozenges drawn,
// marks drawn as ellipses. Unit triangle side = 20 px, origin at lower-left.
std::string render_svg(const Region& region, const MarkSet* marks = nullptr,
                       const Tiling* tiling = nullptr);

}  // namespace hexcount
