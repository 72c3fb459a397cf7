#include "rcp/catalog/game.hpp"

#include <algorithm>

#include "rcp/catalog/family.hpp"
#include "rcp/motif/oo.hpp"

namespace rcp {

namespace {

struct GameCtx {
  int n = 0;
  std::vector<uint32_t> adj;
  std::vector<int> alpha;
  std::vector<int> budget;  // deletions still allowed per vertex
  std::vector<int> sizes;
  std::vector<std::vector<int>> autos;
  GameMemo* memo = nullptr;
  GameLimits limits;
  GameStats stats;
  std::optional<Motif> cex;
  bool exhausted = false;
  Motif scratch;  // adjacency and alpha fixed; lists rewritten per state
};

// Joint canonical form of (alpha, deletions) under one vertex permutation:
// colors are renamed by first use in the permuted alpha (10 fixed), renamed
// deletion columns follow in renaming order, and the columns of colors that
// alpha never uses are interchangeable, so they are emitted sorted.
void encode_state(const GameCtx& c, const std::vector<uint16_t>& del,
                  const std::vector<int>& perm, std::string& key) {
  key.clear();
  static thread_local std::vector<int> a2;
  static thread_local std::vector<uint16_t> d2;
  a2.assign(c.n, 0);
  d2.assign(c.n, 0);
  for (int v = 0; v < c.n; ++v) {
    a2[perm[v]] = c.alpha[v];
    d2[perm[v]] = del[v];
  }
  int map[11] = {0};
  int next = 1;
  for (int v = 0; v < c.n; ++v) {
    int col = a2[v];
    if (col == 10) {
      key.push_back(char(10));
      continue;
    }
    if (!map[col]) map[col] = next++;
    key.push_back(char(map[col]));
  }
  uint16_t used_cols[10] = {0};
  uint16_t free_cols[9];
  int nfree = 0;
  for (int col = 1; col <= 9; ++col) {
    uint16_t bits = 0;
    for (int v = 0; v < c.n; ++v)
      if (d2[v] >> (col - 1) & 1) bits |= uint16_t(1) << v;
    if (map[col]) used_cols[map[col]] = bits;
    else free_cols[nfree++] = bits;
  }
  std::sort(free_cols, free_cols + nfree);
  auto push16 = [&](uint16_t x) {
    key.push_back(char(x & 0xFF));
    key.push_back(char(x >> 8));
  };
  for (int s = 1; s < next; ++s) push16(used_cols[s]);
  for (int i = 0; i < nfree; ++i) push16(free_cols[i]);
}

std::string canonical_key(const GameCtx& c, const std::vector<uint16_t>& del) {
  std::string best, cur;
  for (const auto& perm : c.autos) {
    encode_state(c, del, perm, cur);
    if (best.empty() || cur < best) best = cur;
  }
  return best;
}

void build_counterexample(GameCtx& c, const std::vector<uint16_t>& del) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < c.n; ++u)
    for (int v = u + 1; v < c.n; ++v)
      if (c.adj[u] >> v & 1) edges.push_back({u, v});
  std::vector<std::vector<int>> lists(c.n);
  for (int v = 0; v < c.n; ++v)
    for (int col = 1; col <= 9 && (int)lists[v].size() < c.sizes[v]; ++col)
      if (!(del[v] >> (col - 1) & 1)) lists[v].push_back(col);
  Motif m = make_motif(c.n, edges, c.alpha, lists);
  if (oo_recolorable(m).yes)
    throw CatalogError("internal: refuted state admits a recoloring witness");
  c.cex = std::move(m);
}

bool play(GameCtx& c, std::vector<uint16_t>& del) {
  if (c.limits.max_nodes && c.stats.nodes >= c.limits.max_nodes) {
    c.exhausted = true;
    return false;
  }
  ++c.stats.nodes;
  std::string key = canonical_key(c, del);
  if (c.memo->verified.count(key)) {
    ++c.stats.memo_hits;
    return true;
  }
  for (int v = 0; v < c.n; ++v) c.scratch.lists[v] = kFullList & ~del[v];
  ++c.stats.witness_calls;
  OOResult res = oo_recolorable(c.scratch);
  if (!res.yes) {
    build_counterexample(c, del);
    return false;
  }
  for (int v = 0; v < c.n; ++v) {
    if (__builtin_popcount(del[v]) >= c.budget[v]) continue;
    uint16_t bit = uint16_t(1) << (res.witness.gamma[v] - 1);
    del[v] |= bit;
    bool ok = play(c, del);
    del[v] &= ~bit;
    if (!ok) return false;
  }
  c.memo->verified.insert(std::move(key));
  return true;
}

}  // namespace

GameResult play_deletion_game(const std::vector<uint32_t>& adj, const std::vector<int>& alpha,
                              const std::vector<int>& sizes,
                              const std::vector<std::vector<int>>& autos, GameMemo& memo,
                              const GameLimits& limits) {
  GameCtx c;
  c.n = (int)alpha.size();
  if ((int)adj.size() != c.n || (int)sizes.size() != c.n)
    throw CatalogError("deletion game: mismatched input lengths");
  for (int v = 0; v < c.n; ++v) {
    if (sizes[v] < 1 || sizes[v] > 9)
      throw CatalogError("deletion game: list size out of range at v" + std::to_string(v + 1));
    if (adj[v] >> v & 1) throw CatalogError("deletion game: self-loop");
    for (int u = 0; u < c.n; ++u)
      if ((adj[v] >> u & 1) && alpha[u] == alpha[v] && u != v)
        throw CatalogError("deletion game: alpha not proper");
  }
  c.adj = adj;
  c.alpha = alpha;
  c.sizes = sizes;
  c.budget.resize(c.n);
  for (int v = 0; v < c.n; ++v) c.budget[v] = 9 - sizes[v];
  // Keep only permutations that preserve adjacency and sizes, so memo keys
  // identify states only with genuinely equivalent ones.
  for (const auto& perm : autos) {
    bool ok = (int)perm.size() == c.n;
    for (int v = 0; v < c.n && ok; ++v) {
      if (sizes[perm[v]] != sizes[v]) ok = false;
      uint32_t image = 0;
      for (int u = 0; u < c.n; ++u)
        if (adj[v] >> u & 1) image |= 1u << perm[u];
      if (image != adj[perm[v]]) ok = false;
    }
    if (ok) c.autos.push_back(perm);
  }
  if (c.autos.empty()) {
    std::vector<int> id(c.n);
    for (int v = 0; v < c.n; ++v) id[v] = v;
    c.autos.push_back(id);
  }
  c.memo = &memo;
  c.limits = limits;
  c.scratch.n = c.n;
  c.scratch.adj = c.adj;
  c.scratch.alpha = c.alpha;
  c.scratch.lists.assign(c.n, kFullList);

  std::vector<uint16_t> del(c.n, 0);
  bool ok = play(c, del);
  GameResult r;
  r.verified = ok;
  r.exhausted = c.exhausted;
  r.stats = c.stats;
  r.counterexample = std::move(c.cex);
  return r;
}

GameResult verify_alpha_class(const ConfigurationTemplate& t, const std::vector<int>& alpha,
                              GameMemo& memo, const GameLimits& limits) {
  return play_deletion_game(t.adjacency_masks(), alpha, min_list_sizes(t, alpha),
                            template_automorphisms(t), memo, limits);
}

GameResult verify_alpha_class_literal(const ConfigurationTemplate& t,
                                      const std::vector<int>& alpha,
                                      uint64_t max_assignments) {
  auto sizes = min_list_sizes(t, alpha);
  std::vector<std::vector<uint16_t>> choices(t.n);
  for (int v = 0; v < t.n; ++v)
    for (uint16_t mask = 0; mask < 512; ++mask)
      if (__builtin_popcount(mask) == sizes[v]) choices[v].push_back(mask);
  Motif m;
  m.n = t.n;
  m.adj = t.adjacency_masks();
  m.alpha = alpha;
  m.lists.assign(t.n, 0);

  GameResult r;
  std::vector<size_t> idx(t.n, 0);
  while (true) {
    if (max_assignments && r.stats.nodes >= max_assignments) {
      r.exhausted = true;
      return r;
    }
    ++r.stats.nodes;
    for (int v = 0; v < t.n; ++v) m.lists[v] = choices[v][idx[v]];
    ++r.stats.witness_calls;
    if (!oo_recolorable(m).yes) {
      r.counterexample = m;
      return r;
    }
    int v = t.n - 1;
    while (v >= 0 && ++idx[v] == choices[v].size()) idx[v--] = 0;
    if (v < 0) break;
  }
  r.verified = true;
  return r;
}

}  // namespace rcp
