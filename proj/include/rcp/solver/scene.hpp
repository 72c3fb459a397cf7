#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "rcp/catalog/catalog.hpp"
#include "rcp/motif/motif.hpp"
#include "rcp/recolor/coloring.hpp"

namespace rcp {

// Thrown when an induced motif that the reduction argument guarantees to
// be solvable admits no once-only recoloring. Carries the concrete motif
// so callers can persist it for inspection; seeing this exception means
// either a bug upstream or a genuine counterexample to the argument.
struct ReductionFailure : std::runtime_error {
  Motif motif;
  std::string context;
  ReductionFailure(Motif m, std::string ctx);
};

struct SolveStats {
  long edge_insertions = 0;     // non-adjacent face pair, distinct colors
  long identifications = 0;     // non-adjacent face pair, equal colors
  long ten_recolorings = 0;     // planted color 10 in a bare neighborhood
  long low_degree_peels = 0;    // removed a vertex of degree at most four
  long configuration_peels = 0; // removed a catalog configuration image
  std::map<std::string, long> configs_used;  // catalog id / repair pattern -> count
};

struct SolveResult {
  RecolorSequence sequence;
  Coloring final;  // k = 9
  SolveStats stats;
};

// Recolors the scene to a 9-coloring via a valid sequence: every vertex
// moves at most once (to a color below 10) or exactly twice (first to 10,
// then below 10), so the sequence length is at most 2n. The output is
// replayed through verify_valid_sequence before being returned; failure
// of that check throws logic_error.
SolveResult solve_scene(const Scene& scene);
SolveResult solve_scene(const Scene& scene, const Catalog& catalog);

}  // namespace rcp
