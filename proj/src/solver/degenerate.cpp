#include "rcp/solver/degenerate.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace rcp {

DegeneracyReport degeneracy_order(const PlaneGraph& g) {
  DegeneracyReport rep;
  std::vector<char> alive(g.n, 1);
  std::vector<int> deg(g.n, 0);
  for (int v = 0; v < g.n; ++v) deg[v] = g.degree(v);
  rep.order.reserve(g.n);
  for (int round = 0; round < g.n; ++round) {
    int best = -1;
    for (int v = 0; v < g.n; ++v)
      if (alive[v] && (best == -1 || deg[v] < deg[best])) best = v;
    rep.degeneracy = std::max(rep.degeneracy, deg[best]);
    rep.order.push_back(best);
    alive[best] = 0;
    for (int u : g.rot[best])
      if (alive[u]) --deg[u];
  }
  return rep;
}

namespace {

// Peel-and-patch on plain adjacency lists with local ids.
RecolorSequence peel_recolor(const std::vector<std::vector<int>>& adj, std::vector<int> alpha,
                             const std::vector<int>& beta, int c) {
  int n = static_cast<int>(adj.size());
  if (n == 0) return {};

  int v = 0;
  for (int u = 1; u < n; ++u)
    if (adj[u].size() < adj[v].size()) v = u;

  // Remove v; ids above shift down by one.
  auto shift = [v](int u) { return u > v ? u - 1 : u; };
  std::vector<std::vector<int>> sub(n - 1);
  std::vector<int> sub_alpha(n - 1), sub_beta(n - 1);
  for (int u = 0; u < n; ++u) {
    if (u == v) continue;
    for (int w : adj[u])
      if (w != v) sub[shift(u)].push_back(shift(w));
    sub_alpha[shift(u)] = alpha[u];
    sub_beta[shift(u)] = beta[u];
  }
  RecolorSequence inner = peel_recolor(sub, std::move(sub_alpha), sub_beta, c);

  std::vector<char> near(n, 0);
  for (int w : adj[v]) near[w] = 1;
  RecolorSequence out;
  out.reserve(inner.size() + 2);
  std::vector<int>& cur = alpha;
  auto emit = [&](int u, int col) {
    out.push_back({u, col});
    cur[u] = col;
  };
  for (const auto& st : inner) {
    int u = st.vertex >= v ? st.vertex + 1 : st.vertex;
    if (near[u] && st.color == cur[v]) {
      // Hop v out of the way: avoid the closed neighborhood's current
      // colors, the neighbors' targets, and the pending step. The current
      // color of v equals the pending color, so at most 2k+1 colors are
      // excluded and c >= 2k+2 leaves one free.
      std::vector<char> used(c + 1, 0);
      used[cur[v]] = 1;
      used[st.color] = 1;
      for (int w : adj[v]) {
        used[cur[w]] = 1;
        used[beta[w]] = 1;
      }
      int hop = 0;
      for (int col = 1; col <= c; ++col)
        if (!used[col]) {
          hop = col;
          break;
        }
      if (hop == 0)
        throw ColoringError("degenerate recoloring found no free color to hop to");
      emit(v, hop);
    }
    emit(u, st.color);
  }
  if (cur[v] != beta[v]) emit(v, beta[v]);
  return out;
}

// Shortest path between two proper colorings by breadth-first search over
// packed states; returns an empty optional when the state count or queue
// exceeds the budget.
std::optional<RecolorSequence> bfs_path(const PlaneGraph& g, const Coloring& alpha,
                                        const Coloring& beta, int c, long long budget) {
  int n = g.n;
  double space = 1;
  for (int i = 0; i < n; ++i) {
    space *= c;
    if (space > static_cast<double>(budget) * 4) return std::nullopt;
  }
  auto pack = [&](const std::vector<int>& col) {
    uint64_t s = 0;
    for (int i = n - 1; i >= 0; --i) s = s * c + (col[i] - 1);
    return s;
  };
  uint64_t start = pack(alpha.colors), goal = pack(beta.colors);
  std::unordered_map<uint64_t, std::pair<uint64_t, RecolorStep>> parent;
  parent.emplace(start, std::make_pair(start, RecolorStep{-1, -1}));
  std::vector<uint64_t> frontier{start}, next;
  std::vector<int> col(n);
  auto unpack = [&](uint64_t s) {
    for (int i = 0; i < n; ++i) {
      col[i] = static_cast<int>(s % c) + 1;
      s /= c;
    }
  };
  bool found = start == goal;
  while (!frontier.empty() && !found) {
    next.clear();
    for (uint64_t s : frontier) {
      if (found) break;
      unpack(s);
      for (int v = 0; v < n && !found; ++v) {
        uint64_t base = 1;
        for (int i = 0; i < v; ++i) base *= c;
        for (int cc = 1; cc <= c; ++cc) {
          if (cc == col[v]) continue;
          bool ok = true;
          for (int u : g.rot[v]) ok = ok && col[u] != cc;
          if (!ok) continue;
          uint64_t t = s + base * (cc - col[v]);
          if (parent.count(t)) continue;
          if (static_cast<long long>(parent.size()) >= budget) return std::nullopt;
          parent.emplace(t, std::make_pair(s, RecolorStep{v, cc}));
          next.push_back(t);
          if (t == goal) {
            found = true;
            break;
          }
        }
      }
    }
    frontier.swap(next);
  }
  if (!found) return std::nullopt;
  RecolorSequence seq;
  for (uint64_t s = goal; s != start;) {
    auto& pr = parent.at(s);
    seq.push_back(pr.second);
    s = pr.first;
  }
  std::reverse(seq.begin(), seq.end());
  return seq;
}

}  // namespace

RecolorSequence recolor_degenerate(const PlaneGraph& g, const Coloring& alpha,
                                   const Coloring& beta, int c, long long bfs_budget) {
  if (static_cast<int>(alpha.colors.size()) != g.n ||
      static_cast<int>(beta.colors.size()) != g.n)
    throw ColoringError("degenerate recoloring: coloring sizes do not match the graph");
  for (int v = 0; v < g.n; ++v)
    if (alpha.colors[v] < 1 || alpha.colors[v] > c || beta.colors[v] < 1 || beta.colors[v] > c)
      throw ColoringError("degenerate recoloring: color out of range");
  if (!is_proper(g, alpha) || !is_proper(g, beta))
    throw ColoringError("degenerate recoloring: endpoint coloring is not proper");
  int k = degeneracy_order(g).degeneracy;
  if (c < 2 * k + 2)
    throw ColoringError("degenerate recoloring needs at least 2k+2 = " +
                        std::to_string(2 * k + 2) + " colors, got " + std::to_string(c));

  std::vector<std::vector<int>> adj(g.rot.begin(), g.rot.end());
  RecolorSequence seq = peel_recolor(adj, alpha.colors, beta.colors, c);

  size_t bound = static_cast<size_t>(k + 1) * static_cast<size_t>(g.n);
  std::string replay = check_recoloring_path(g, alpha, seq, beta);
  if (!replay.empty())
    throw std::logic_error("degenerate recoloring replay failed: " + replay);
  if (seq.size() <= bound) return seq;

  auto fallback = bfs_path(g, alpha, beta, c, bfs_budget);
  if (fallback && fallback->size() <= bound) return *fallback;
  throw ColoringError("degenerate recoloring exceeded the (k+1)n bound (" +
                      std::to_string(seq.size()) + " > " + std::to_string(bound) +
                      ") and the search fallback did not fit the budget");
}

}  // namespace rcp
