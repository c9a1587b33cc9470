#pragma once

#include <string>
#include <vector>

#include "tropnet/tropical.hpp"

namespace tropnet {

struct LabeledTropLine {
    TropLine line;
    std::string label;
};

struct LabeledTropPoint {
    TropPoint point;
    std::string label;
};

/// Schematic figure of tropical lines (west/south/northeast rays from each
/// center) and labeled points on the integer grid. Fixed scale 1 unit = 40 px,
/// origin-centered viewport sized to the data.
std::string render_tropical_svg(const std::vector<LabeledTropLine>& lines,
                                const std::vector<LabeledTropPoint>& points);

/// Polyline rendering of amoeba boundary branches, same scale and viewport
/// conventions.
std::string render_amoeba_svg(const std::vector<AmoebaBranchSamples>& branches);

/// One "# name" header per branch followed by x,y sample rows.
std::string amoeba_csv(const std::vector<AmoebaBranchSamples>& branches);

}  // namespace tropnet
