#pragma once

#include <optional>

#include "rcp/motif/motif.hpp"
#include "rcp/motif/oo.hpp"

namespace rcp {

enum class DeleteMode { Plain, Colored10 };

// Vertex deletion. Plain mode needs |L(v)| > deg(v) + deg'(v) where
// deg'(v) counts neighbors not colored 10; Colored10 mode needs
// alpha(v) == 10 and |L(v)| > deg(v). Lists are untouched. If the result
// is once-only recolorable, so is the original (see the lift functions).
Motif reduce_delete(const Motif& m, int v, DeleteMode mode);

// Commit v to color c as its first move: requires c in L(v) and c not
// among the neighbors' current colors. Result drops v and removes c from
// every neighbor's list.
Motif reduce_forward(const Motif& m, int v, int c);

// Reserve color c for v's final move: requires c in L(v). Result drops v
// and removes both alpha(v) and c from every neighbor's list.
Motif reduce_reserve(const Motif& m, int v, int c);

// Derived strategy: smallest color c in L(v) avoiding every neighbor's
// current color and every singleton neighbor list, so reduce_forward
// shrinks each neighbor list by at most one and singletons not at all.
// Guaranteed to exist when |L(v)| > deg'(v) + #{u ~ v : |L(u)| = 1}.
std::optional<int> xycons_choice(const Motif& m, int v);

// Witness lifting: turn a witness for the reduced motif into one for m.
OOWitness lift_delete(const Motif& m, int v, DeleteMode mode, const OOWitness& wr);
OOWitness lift_forward(const Motif& m, int v, int c, const OOWitness& wr);
OOWitness lift_reserve(const Motif& m, int v, int c, const OOWitness& wr);

}  // namespace rcp
