#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "rcp/catalog/catalog.hpp"
#include "rcp/motif/motif.hpp"

namespace rcp {

// Decides whether EVERY assignment of color lists L(v) subseteq {1..9} with
// |L(v)| == sizes[v] makes (graph, alpha, L) once-only recolorable, by a
// deletion game: we repeatedly exhibit a recoloring witness avoiding the
// deleted colors, and branch over the adversary's ways of deleting one
// witness color at a vertex with remaining deletion budget 9 - sizes[v].
// A state with no witness yields a concrete non-recolorable instance built
// from the smallest remaining colors; exact sizes suffice because shrinking
// lists only removes witnesses.

struct GameLimits {
  uint64_t max_nodes = 0;  // 0 = unlimited
};

struct GameStats {
  uint64_t nodes = 0;
  uint64_t memo_hits = 0;
  uint64_t witness_calls = 0;
};

struct GameResult {
  bool verified = false;
  bool exhausted = false;  // node budget hit before a verdict
  GameStats stats;
  std::optional<Motif> counterexample;  // set when refuted
};

// Memo of verified states, shared across alpha classes of one template.
// Keys canonicalize jointly over the supplied vertex automorphisms and all
// color renamings fixing 10.
struct GameMemo {
  std::unordered_set<std::string> verified;
};

// Low-level entry: arbitrary graph given by adjacency bitmasks.
GameResult play_deletion_game(const std::vector<uint32_t>& adj, const std::vector<int>& alpha,
                              const std::vector<int>& sizes,
                              const std::vector<std::vector<int>>& autos, GameMemo& memo,
                              const GameLimits& limits = {});

// Catalog entry point: sizes come from the hypothesis-set bounds for alpha.
GameResult verify_alpha_class(const ConfigurationTemplate& t, const std::vector<int>& alpha,
                              GameMemo& memo, const GameLimits& limits = {});

// Cross-check: enumerates every exact-size list assignment (up to a renaming
// of the colors outside alpha) and tests each directly. Exponential in the
// sizes; used to validate the game on small templates.
GameResult verify_alpha_class_literal(const ConfigurationTemplate& t,
                                      const std::vector<int>& alpha,
                                      uint64_t max_assignments = 0);

}  // namespace rcp
