// Exact lattice-point counting for 2D lattice polygons via Pick's formula.
#pragma once

#include "digiconv/hull2d.hpp"

namespace digiconv {

// Exact doubled area (shoelace); 0 for degenerate hulls.
i128 twice_area(const Hull2D& hull);

// Lattice points on the hull boundary, each counted once.
i64 boundary_count(const Hull2D& hull);

// Total lattice points in the closed hull: (2A + B)/2 + 1 when the hull is
// full-dimensional (A = I + B/2 - 1 rearranged for the total I + B), the
// direct boundary count otherwise.
i64 lattice_count(const Hull2D& hull);

}  // namespace digiconv
