#pragma once

#include <cstdint>
#include <string>

#include "rcp/embed/plane_graph.hpp"

namespace rcp {

// Fixed reference solids with hand-checked rotation systems. Names:
// "k4", "octahedron", "icosahedron".
PlaneGraph generate_named(const std::string& name);

// For the icosahedron as generated here, vertex i and 11 - i are antipodal.
inline int icosahedron_antipode(int v) { return 11 - v; }

// Random plane triangulation on n >= 4 vertices: grow from K4 by inserting
// vertices into uniformly chosen inner faces, then apply `flips` random
// diagonal flips (default 4m when flips < 0). The outer face is fixed.
PlaneGraph generate_random_triangulation(int n, uint64_t seed, long flips = -1);

// Random triangulation whose non-outer vertices all have degree >= 5
// (n >= 12). Grows from the icosahedron, preserving the degree invariant
// at every step; throws GraphError("generator budget exhausted ...") when
// the seed leads to a dead end.
PlaneGraph generate_random_mindeg5(int n, uint64_t seed);

}  // namespace rcp
