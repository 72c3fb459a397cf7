#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rcp/motif/motif.hpp"

namespace rcp {

// Exhaustive checks of the small recoloring facts everything else leans on.
// Each check fixes a host graph and exact list sizes, enumerates every
// coloring class (colors renamed by first use, 10 kept) and every list
// assignment of those sizes, and tests once-only recolorability against the
// claim; claims with exceptional families are verified in both directions.
// Exact sizes cover larger lists too: a witness for some truncation is a
// witness for the full assignment.
struct LemmaReport {
  std::string name;
  uint64_t classes = 0;      // coloring classes enumerated
  uint64_t instances = 0;    // (coloring, lists) pairs tested
  uint64_t recolorable = 0;  // instances with a witness
  uint64_t exceptional = 0;  // instances inside the exceptional family
  bool verified = false;
  std::string failure;  // which direction broke, empty when verified
  std::optional<Motif> counterexample;
  double runtime_seconds = 0;
};

std::vector<std::string> base_lemma_names();

// Runs one named check; throws std::out_of_range for unknown names.
LemmaReport verify_base_lemma(const std::string& name);

std::vector<LemmaReport> verify_base_lemmas();

}  // namespace rcp
