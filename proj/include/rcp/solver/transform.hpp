#pragma once

#include <cstdint>
#include <vector>

#include "rcp/catalog/catalog.hpp"
#include "rcp/recolor/coloring.hpp"
#include "rcp/solver/scene.hpp"

namespace rcp {

struct PartitionOptions {
  int exact_cap = 40;            // complete search up to this many vertices
  int restarts = 200;            // greedy attempts beyond the cap
  uint64_t seed = 0;             // tie-breaking stream for the greedy phase
  long long node_budget = 4000000;  // complete-search nodes before giving up
};

struct Partition {
  std::vector<int> independent;  // sorted
  std::vector<int> rest;         // sorted; induces a 3-degenerate subgraph
  bool exact = false;            // found by the complete search
};

// Splits the vertices into an independent set and a set inducing a
// 3-degenerate subgraph. Every planar graph has such a partition; the
// finder is complete up to the cap and greedy with restarts above it, and
// throws GraphError when the greedy phase fails every restart.
Partition thomassen_partition(const PlaneGraph& g, const PartitionOptions& opts = {});

struct TransformResult {
  RecolorSequence sequence;
  size_t first_length = 0;   // alpha down to nine colors
  size_t middle_length = 0;  // degenerate-part walk, plus the hops to 10
  size_t second_length = 0;  // nine colors back up to beta, reversed
  std::vector<int> independent;
  SolveStats first_stats, second_stats;
};

// Full walk from alpha to beta in at most 8n single-vertex recolorings:
// drive both endpoint colorings down to nine colors, park an independent
// set on the freed color 10, and walk the remaining 3-degenerate part
// between the two nine-colorings. The result is replay-verified from
// alpha to beta before being returned.
TransformResult transform_10(const PlaneGraph& g, const Coloring& alpha, const Coloring& beta);
TransformResult transform_10(const PlaneGraph& g, const Coloring& alpha, const Coloring& beta,
                             const Catalog& catalog, const PartitionOptions& opts = {});

}  // namespace rcp
