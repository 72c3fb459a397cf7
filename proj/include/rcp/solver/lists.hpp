#pragma once

#include <vector>

#include "rcp/embed/plane_graph.hpp"
#include "rcp/motif/motif.hpp"
#include "rcp/recolor/coloring.hpp"

namespace rcp {

// Replacement-color lists for the vertices of an induced subgraph,
// indexed like the defining member list.
struct AvailableLists {
  std::vector<int> members;     // sorted vertex ids
  std::vector<uint16_t> lists;  // bitmask per member, bit c-1 = color c
};

// Colors 1..9 minus the initial and final colors of every neighbor outside
// `members`. gamma_outside[v] is the final color (1..9) of each vertex
// outside `members`; entries for members are ignored. Each computed list
// is checked against the size the degree bookkeeping guarantees: at least
// 9 - 2*(outside neighbors), plus one for every outside neighbor whose
// initial color is 10 (only its final color can collide). A shortfall
// throws ColoringError, since it signals an improper input.
AvailableLists compute_available_lists(const PlaneGraph& g, const Coloring& alpha,
                                       const std::vector<int>& members,
                                       const std::vector<int>& gamma_outside);

// The motif living on `members`: induced adjacency, alpha restricted, and
// the given lists.
Motif induced_motif(const PlaneGraph& g, const Coloring& alpha, const AvailableLists& avail);

}  // namespace rcp
