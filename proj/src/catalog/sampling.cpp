#include "rcp/catalog/sampling.hpp"

#include <chrono>

#include "rcp/catalog/family.hpp"
#include "rcp/catalog/universal.hpp"
#include "rcp/motif/oo.hpp"
#include "rcp/util/rng.hpp"

namespace rcp {

std::string verify_mode_token(VerifyMode m) {
  return m == VerifyMode::Exhaustive ? "exhaustive" : "randomized";
}

VerifyMode default_verify_mode(const ConfigurationTemplate& t) {
  for (const char* id : {"C8", "C9", "C10", "C11", "C15"})
    if (t.id == id) return VerifyMode::Randomized;
  return VerifyMode::Exhaustive;
}

uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  uint64_t r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

std::vector<int> unrank_combination(uint64_t rank, int n, int k) {
  std::vector<int> out;
  out.reserve(k);
  int start = 1;
  for (int need = k; need > 0; --need) {
    for (int c = start;; ++c) {
      uint64_t with_c = binomial(n - c, need - 1);
      if (rank < with_c) {
        out.push_back(c);
        start = c + 1;
        break;
      }
      rank -= with_c;
    }
  }
  return out;
}

uint64_t config_tag(const std::string& id) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : id) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  return h;
}

namespace {

// Does some automorphic relabeling make the class sizes dominate the listed
// vector entrywise, with every bracketed segment holding a 10 under alpha?
bool class_covered(const ConfigurationTemplate& t, const std::vector<int>& alpha,
                   const std::vector<int>& sizes,
                   const std::vector<std::vector<int>>& autos) {
  for (size_t i = 0; i < t.vectors.size(); ++i) {
    const auto& d = t.vectors[i];
    for (const auto& perm : autos) {
      bool ok = true;
      for (int v = 0; v < t.n && ok; ++v)
        if (!d.entries[v].wildcard && sizes[perm[v]] < d.entries[v].size) ok = false;
      for (const auto& [lo, hi] : d.bracket_groups) {
        bool ten = false;
        for (int v = lo; v <= hi; ++v)
          if (alpha[perm[v]] == 10) ten = true;
        if (!ten) ok = false;
      }
      if (ok) return true;
    }
  }
  return false;
}

}  // namespace

VerifyReport verify_configuration(const ConfigurationTemplate& t, VerifyMode mode,
                                  uint64_t samples, uint64_t seed,
                                  const GameLimits& limits) {
  auto t0 = std::chrono::steady_clock::now();
  VerifyReport rep;
  rep.config = t.id;
  rep.mode = mode;

  auto classes = enumerate_alpha_classes(t);
  rep.classes_total = classes.size();
  auto autos = template_automorphisms(t);
  auto adj = t.adjacency_masks();

  for (const auto& alpha : classes)
    if (class_covered(t, alpha, min_list_sizes(t, alpha), autos)) ++rep.classes_covered;

  if (mode == VerifyMode::Exhaustive) {
    auto shape = star_path_shape(t);
    GameMemo memo;
    rep.verified = true;
    for (const auto& alpha : classes) {
      auto sizes = min_list_sizes(t, alpha);
      if (shape) {
        auto res = verify_universal_class(t, alpha, sizes, limits.max_nodes);
        rep.stats.nodes += res.stats.sets_explored;
        if (!res.verified) {
          rep.verified = false;
          rep.exhausted = res.exhausted;
          if (!res.bad_lists.empty()) {
            Motif m;
            m.n = t.n;
            m.adj = adj;
            m.alpha = alpha;
            m.lists = res.bad_lists;
            rep.counterexample = m;
          }
          break;
        }
      } else {
        auto res = play_deletion_game(adj, alpha, sizes, autos, memo, limits);
        rep.stats.nodes += res.stats.nodes;
        rep.stats.memo_hits += res.stats.memo_hits;
        rep.stats.witness_calls += res.stats.witness_calls;
        if (!res.verified) {
          rep.verified = false;
          rep.exhausted = res.exhausted;
          rep.counterexample = res.counterexample;
          break;
        }
      }
      ++rep.classes_checked;
    }
  } else {
    Rng rng(mix_seed(seed, config_tag(t.id)));
    Motif m;
    m.n = t.n;
    m.adj = adj;
    rep.verified = true;
    for (uint64_t i = 0; i < samples; ++i) {
      const auto& alpha = classes[rng.below(classes.size())];
      auto sizes = min_list_sizes(t, alpha);
      m.alpha = alpha;
      m.lists.assign(t.n, 0);
      for (int v = 0; v < t.n; ++v) {
        auto cols = unrank_combination(rng.below(binomial(9, sizes[v])), 9, sizes[v]);
        for (int c : cols) m.lists[v] |= uint16_t(1) << (c - 1);
      }
      ++rep.samples;
      ++rep.stats.witness_calls;
      if (!oo_recolorable(m).yes) {
        rep.verified = false;
        rep.counterexample = m;
        break;
      }
    }
  }
  rep.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace rcp
