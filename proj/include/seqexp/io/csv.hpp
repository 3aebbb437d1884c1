#pragma once

#include <string>
#include <utility>
#include <vector>

#include "seqexp/asympt/hpreal.hpp"

namespace seqexp::io {

using Point = std::pair<std::string, std::string>;

/// Header row then one "x,y" row per point; fields containing commas,
/// quotes or newlines are quoted.
std::string emit_csv(const std::vector<Point>& points, const std::string& header = "x,y");

/// Full-precision decimal rendering of (x, y) pairs.
std::vector<Point> to_points(const std::vector<std::pair<asympt::HpReal, asympt::HpReal>>& pts);

}  // namespace seqexp::io
