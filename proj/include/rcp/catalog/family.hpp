#pragma once

#include <cstdint>
#include <vector>

#include "rcp/catalog/catalog.hpp"
#include "rcp/motif/motif.hpp"

namespace rcp {

// Permutations of the pattern vertices that preserve both adjacency and marks.
// Each entry maps old index -> new index.
std::vector<std::vector<int>> template_automorphisms(const ConfigurationTemplate& t);

// Rename the colors of `alpha` in order of first appearance (10 stays 10):
// the first non-10 color becomes 1, the next distinct one 2, and so on.
std::vector<int> renumber_first_use(const std::vector<int>& alpha);

// Lexicographically least renumbered alpha over all template automorphisms.
std::vector<int> canonical_alpha(const ConfigurationTemplate& t,
                                 const std::vector<int>& alpha,
                                 const std::vector<std::vector<int>>& autos);

// All canonical representatives of proper colorings of the pattern that satisfy
// every hypothesis, up to color renaming and template symmetry.  Colors are
// drawn from {1..9, 10}; a fresh coloring never skips a color, so every class
// representative uses colors {1..k} plus possibly 10.
std::vector<std::vector<int>> enumerate_alpha_classes(const ConfigurationTemplate& t);

// Number of colorings in the full product space {1..10}^n that are proper,
// satisfy the hypotheses, and canonicalize to each class; used for audits.
uint64_t count_alpha_colorings(const ConfigurationTemplate& t, int colors = 10);

}  // namespace rcp
