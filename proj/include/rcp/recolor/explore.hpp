#pragma once

#include <vector>

#include "rcp/recolor/coloring.hpp"

namespace rcp {

struct ExploreReport {
  int k = 0;
  long long states = 0;  // number of proper k-colorings found (up to the cap)
  bool budget_exceeded = false;
  long long frozen = 0;
  long long orbits = 0;  // color-permutation orbit count
  bool connected = false;
  std::vector<long long> component_sizes;
  std::vector<int> component_diameters;
  int diameter = -1;  // max over components; -1 when there are no states
};

// Builds the reconfiguration graph over all proper k-colorings of g and
// reports its component structure. States are packed base-k integers.
// Eccentricities are computed from one representative per color-permutation
// orbit (color permutations are automorphisms of the reconfiguration
// graph, so eccentricity is constant on orbits). When the number of states
// exceeds `budget`, only the flag and the partial count are reported.
ExploreReport explore(const PlaneGraph& g, int k, long long budget = 2000000);

}  // namespace rcp
