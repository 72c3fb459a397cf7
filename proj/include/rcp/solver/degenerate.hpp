#pragma once

#include <vector>

#include "rcp/embed/plane_graph.hpp"
#include "rcp/recolor/coloring.hpp"

namespace rcp {

// Repeatedly removes a minimum-degree vertex. `order` is the removal
// order and `degeneracy` the largest degree seen at removal time. Only
// adjacency is used, so any graph fits.
struct DegeneracyReport {
  int degeneracy = 0;
  std::vector<int> order;
};

DegeneracyReport degeneracy_order(const PlaneGraph& g);

// Step-by-step recoloring between two proper c-colorings of a graph of
// degeneracy k, using at most (k+1)*n recolorings and c >= 2k+2 colors.
// Scheme: remove a minimum-degree vertex v, transform the rest, and
// replay that sequence with v present; whenever a pending step collides
// with v's current color, v first hops to a color free in its closed
// neighborhood, among the remaining targets of its neighbors, and off the
// pending step. Finally v moves to its target. The length bound is
// checked on the result; if the replay exceeds it, a breadth-first search
// over the full coloring space is attempted within `bfs_budget` states,
// and failing that a ColoringError reports the instance honestly.
RecolorSequence recolor_degenerate(const PlaneGraph& g, const Coloring& alpha,
                                   const Coloring& beta, int c,
                                   long long bfs_budget = 2000000);

}  // namespace rcp
