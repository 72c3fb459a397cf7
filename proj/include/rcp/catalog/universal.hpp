#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rcp/catalog/catalog.hpp"

namespace rcp {

// Shape accepted by the exact universal-list engine: an optional hub vertex
// adjacent to every other vertex, while the remaining vertices (kept in
// index order) carry edges only between consecutive positions.  Under this
// shape every cycle of conflict arcs must pass through the hub, so witness
// reachability along the path can be tracked with constant-size state.
struct StarPathShape {
  int hub = -1;                         // -1 when the template has no hub
  std::vector<int> path;                // non-hub vertices in index order
  std::vector<std::uint8_t> left_edge;  // left_edge[i]: path[i-1] ~ path[i]
};

std::optional<StarPathShape> star_path_shape(const ConfigurationTemplate& t);

struct UniversalStats {
  std::uint64_t sets_explored = 0;   // antichain sets summed over all levels
  std::uint64_t peak_antichain = 0;  // largest frontier encountered
};

struct UniversalResult {
  bool verified = false;
  bool exhausted = false;                 // stopped at the set budget
  std::vector<std::uint16_t> bad_lists;   // a failing assignment when refuted
  UniversalStats stats;
};

// Decides exactly whether every assignment of color lists with the given
// per-vertex sizes admits a proper recoloring whose conflicts order
// acyclically.  The adversary picks the lists level by level; the engine
// keeps an antichain of minimal reachable witness-state sets, so the claim
// holds iff every minimal final set still satisfies the hub acceptance
// condition.  When refuted, bad_lists holds a concrete failing assignment
// (validated internally against the witness search).  A max_sets budget of
// zero means no limit.
UniversalResult verify_universal_class(const ConfigurationTemplate& t,
                                       const std::vector<int>& alpha,
                                       const std::vector<int>& sizes,
                                       std::uint64_t max_sets = 0);

}  // namespace rcp
