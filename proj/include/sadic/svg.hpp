#pragma once

#include <string>

#include "sadic/coincidence.hpp"
#include "sadic/rauzy.hpp"

namespace sadic {

/// Two colored strips over the π₀ axis, one per subtile; points are binned to
/// pixel columns.
std::string fractal_svg(const RauzyApprox& approx, int width = 800);

/// Broken lines of the iterate colored by source segment, with the stripe
/// boundaries v⊥ + t·u drawn dashed and the in-stripe vertices marked.
std::string configuration_svg(const ExplorerReport& report, const DirectionVec& u, const DirectionVec& v,
                              int size = 600);

}  // namespace sadic
