#pragma once

#include <string>
#include <vector>

#include "rcp/motif/motif.hpp"

namespace rcp {

// A once-only recoloring: every vertex with gamma(v) != alpha(v) is
// recolored exactly once, directly to gamma(v), in the given order;
// vertices with gamma(v) == alpha(v) are untouched.
struct OOWitness {
  std::vector<int> gamma;
  std::vector<int> order;  // recolored vertices, replay order
};

struct OOResult {
  bool yes = false;
  OOWitness witness;  // meaningful only when yes
};

// Decides once-only recolorability: searches proper list colorings gamma
// (vertices by decreasing degree then label, colors ascending, forward
// pruning) and accepts the first one whose conflict digraph — arc u -> v
// when uv is an edge and gamma(v) == alpha(u), i.e. u must move first —
// is acyclic. The witness order is a topological order of that digraph.
OOResult oo_recolorable(const Motif& m);

// Replays the witness step by step; empty string when it is a valid
// once-only recoloring of m to an L-coloring.
std::string check_witness(const Motif& m, const OOWitness& w);

// Oracle: tries every proper list coloring and every permutation of its
// recolored set. Exponential; for cross-checks on tiny motifs only.
bool oo_recolorable_bruteforce(const Motif& m);

}  // namespace rcp
