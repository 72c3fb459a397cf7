#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rcp/catalog/catalog.hpp"
#include "rcp/catalog/game.hpp"

namespace rcp {

enum class VerifyMode { Exhaustive, Randomized };

std::string verify_mode_token(VerifyMode m);

// The handful of large templates where the universal claim is spot-checked by
// sampling instead of played out exhaustively.
VerifyMode default_verify_mode(const ConfigurationTemplate& t);

struct VerifyReport {
  std::string config;
  VerifyMode mode = VerifyMode::Exhaustive;
  uint64_t classes_total = 0;    // coloring classes up to symmetry
  uint64_t classes_checked = 0;  // classes fully played (exhaustive mode)
  uint64_t samples = 0;          // list assignments tested (randomized mode)
  // Classes whose computed size vector dominates a listed vector whose
  // bracketed segments all carry color 10; a gap flags a catalog hole.
  uint64_t classes_covered = 0;
  bool verified = false;
  bool exhausted = false;
  GameStats stats;
  std::optional<Motif> counterexample;
  double runtime_seconds = 0;
};

// Exhaustive: decides the universal list claim for every coloring class with
// the sizes the hypothesis set guarantees, using the exact hub-plus-path
// engine when the template shape allows it and the deletion game otherwise.
// Randomized: draws `samples` pairs (uniform class, uniform exact-size lists
// via combination unranking) and tests each directly. Any failure surfaces a
// concrete motif.
VerifyReport verify_configuration(const ConfigurationTemplate& t, VerifyMode mode,
                                  uint64_t samples, uint64_t seed,
                                  const GameLimits& limits = {});

// r-th k-subset of {1..n} in lexicographic order, r in [0, C(n,k)).
std::vector<int> unrank_combination(uint64_t rank, int n, int k);
uint64_t binomial(int n, int k);

// Stable stream tag for a config id, fed to mix_seed.
uint64_t config_tag(const std::string& id);

}  // namespace rcp
