#include "rcp/motif/oo.hpp"

#include <algorithm>
#include <numeric>

namespace rcp {

namespace {

// Topological order of the conflict digraph restricted to the recolored
// set; returns false on a cycle. Arc u -> v when uv is an edge and
// gamma(v) == alpha(u): u must vacate alpha(u) before v takes it.
bool topo_order(const Motif& m, const std::vector<int>& gamma, std::vector<int>& order) {
  uint32_t moved = 0;
  for (int v = 0; v < m.n; ++v)
    if (gamma[v] != m.alpha[v]) moved |= 1u << v;
  std::vector<int> indeg(m.n, 0);
  for (int u = 0; u < m.n; ++u) {
    if (!(moved >> u & 1)) continue;
    for (int v = 0; v < m.n; ++v)
      if (m.has_edge(u, v) && gamma[v] == m.alpha[u]) ++indeg[v];
  }
  order.clear();
  uint32_t left = moved;
  while (left) {
    int pick = -1;
    for (int v = 0; v < m.n; ++v)
      if ((left >> v & 1) && indeg[v] == 0) {
        pick = v;
        break;
      }
    if (pick == -1) return false;  // cycle
    order.push_back(pick);
    left &= ~(1u << pick);
    for (int v = 0; v < m.n; ++v)
      if (m.has_edge(pick, v) && gamma[v] == m.alpha[pick]) --indeg[v];
  }
  return true;
}

}  // namespace

OOResult oo_recolorable(const Motif& m) {
  OOResult res;
  if (m.n == 0) {
    res.yes = true;
    return res;
  }
  // Static assignment order: decreasing degree, then label.
  std::vector<int> order(m.n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return m.deg(a) > m.deg(b); });
  std::vector<int> pos(m.n);  // vertex -> slot in the assignment order
  for (int i = 0; i < m.n; ++i) pos[order[i]] = i;

  std::vector<uint16_t> avail(m.lists);  // remaining candidates per vertex
  for (int v = 0; v < m.n; ++v)
    if (avail[v] == 0) {
      res.yes = false;
      return res;
    }
  std::vector<int> gamma(m.n, 0);
  std::vector<int> topo;

  // Depth-first search over gamma with forward pruning.
  auto search = [&](auto&& self, int depth) -> bool {
    if (depth == m.n) {
      if (!topo_order(m, gamma, topo)) return false;
      res.witness.gamma = gamma;
      res.witness.order = topo;
      return true;
    }
    int v = order[depth];
    uint16_t cand = avail[v];
    while (cand) {
      uint16_t bit = cand & static_cast<uint16_t>(-cand);
      cand = static_cast<uint16_t>(cand ^ bit);
      int c = __builtin_ctz(bit) + 1;
      gamma[v] = c;
      // Drop c from later neighbors; prune if a list empties.
      bool dead = false;
      uint32_t touched = 0;
      for (int u = 0; u < m.n && !dead; ++u) {
        if (!m.has_edge(v, u) || pos[u] <= depth) continue;
        if (avail[u] & bit) {
          avail[u] = static_cast<uint16_t>(avail[u] ^ bit);
          touched |= 1u << u;
          if (avail[u] == 0) dead = true;
        }
      }
      if (!dead && self(self, depth + 1)) return true;
      for (int u = 0; u < m.n; ++u)
        if (touched >> u & 1) avail[u] = static_cast<uint16_t>(avail[u] | bit);
    }
    gamma[v] = 0;
    return false;
  };
  res.yes = search(search, 0);
  return res;
}

std::string check_witness(const Motif& m, const OOWitness& w) {
  if (static_cast<int>(w.gamma.size()) != m.n) return "gamma length mismatch";
  for (int v = 0; v < m.n; ++v)
    if (!m.in_list(v, w.gamma[v]))
      return "gamma(" + std::to_string(v) + ") is not in the vertex's list";
  std::vector<int> times(m.n, 0);
  for (int v : w.order) {
    if (v < 0 || v >= m.n) return "order contains an out-of-range vertex";
    if (++times[v] > 1) return "vertex " + std::to_string(v) + " recolored twice";
  }
  for (int v = 0; v < m.n; ++v) {
    bool moved = w.gamma[v] != m.alpha[v];
    if (moved && times[v] == 0) return "vertex " + std::to_string(v) + " never reaches gamma";
    if (!moved && times[v] != 0) return "no-op step at vertex " + std::to_string(v);
  }
  std::vector<int> cur(m.alpha);
  for (int v : w.order) {
    for (int u = 0; u < m.n; ++u)
      if (m.has_edge(v, u) && cur[u] == w.gamma[v])
        return "step at vertex " + std::to_string(v) + " collides with vertex " + std::to_string(u);
    cur[v] = w.gamma[v];
  }
  return "";
}

bool oo_recolorable_bruteforce(const Motif& m) {
  std::vector<int> gamma(m.n, 0);
  auto try_orders = [&]() {
    std::vector<int> moved;
    for (int v = 0; v < m.n; ++v)
      if (gamma[v] != m.alpha[v]) moved.push_back(v);
    std::sort(moved.begin(), moved.end());
    do {
      std::vector<int> cur(m.alpha);
      bool ok = true;
      for (int v : moved) {
        for (int u = 0; u < m.n && ok; ++u)
          if (m.has_edge(v, u) && cur[u] == gamma[v]) ok = false;
        if (!ok) break;
        cur[v] = gamma[v];
      }
      if (ok) return true;
    } while (std::next_permutation(moved.begin(), moved.end()));
    return false;
  };
  auto rec = [&](auto&& self, int v) -> bool {
    if (v == m.n) return try_orders();
    for (int c = 1; c <= 9; ++c) {
      if (!m.in_list(v, c)) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        if (m.has_edge(v, u) && gamma[u] == c) ok = false;
      if (!ok) continue;
      gamma[v] = c;
      if (self(self, v + 1)) return true;
    }
    gamma[v] = 0;
    return false;
  };
  return rec(rec, 0);
}

}  // namespace rcp
