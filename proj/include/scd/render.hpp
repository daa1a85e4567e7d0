#pragma once

#include <string>

#include "scd/partition.hpp"

namespace scd {

/// Static SVG arc diagram: the signed ground set on a line in order, every arc
/// of the full partition drawn above it with its label at the apex.
std::string render_svg(const LabelledPartition& lambda);

}  // namespace scd
