// Digital convexity test for d = 2: traced quickhull with the half-discard
// early stop, then a Pick count compared against |S|.
#pragma once

#include "digiconv/quickhull.hpp"
#include "digiconv/report.hpp"

namespace digiconv {

ConvexityReport is_digital_convex_2d(const PointSet& s);

}  // namespace digiconv
