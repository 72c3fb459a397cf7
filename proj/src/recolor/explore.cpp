#include "rcp/recolor/explore.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>

namespace rcp {

namespace {

// Big-endian packing: vertex 0 is the most significant digit, so the
// backtracking enumeration below emits codes in ascending order.
struct Codec {
  int n, k;
  std::vector<uint64_t> weight;  // k^(n-1-v)
  Codec(int n_, int k_) : n(n_), k(k_), weight(n_) {
    uint64_t w = 1;
    for (int v = n - 1; v >= 0; --v) {
      weight[v] = w;
      if (v > 0) w *= static_cast<uint64_t>(k);
    }
  }
  int digit(uint64_t code, int v) const {
    return static_cast<int>(code / weight[v] % static_cast<uint64_t>(k)) + 1;
  }
};

void enumerate_states(const PlaneGraph& g, int k, long long cap, std::vector<uint64_t>& out,
                      bool& exceeded) {
  Codec cod(g.n, k);
  std::vector<int> col(g.n, 0);
  uint64_t code = 0;
  exceeded = false;

  // Iterative backtracking over vertices in id order.
  int v = 0;
  while (v >= 0) {
    if (v == g.n) {
      out.push_back(code);
      if (static_cast<long long>(out.size()) > cap) {
        exceeded = true;
        return;
      }
      --v;
      continue;
    }
    int c = col[v] + 1;
    if (col[v] > 0) code -= static_cast<uint64_t>(col[v] - 1) * cod.weight[v];
    bool advanced = false;
    for (; c <= k; ++c) {
      bool ok = true;
      for (int u : g.rot[v])
        if (u < v && col[u] == c) {
          ok = false;
          break;
        }
      if (ok) {
        col[v] = c;
        code += static_cast<uint64_t>(c - 1) * cod.weight[v];
        ++v;
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      col[v] = 0;
      --v;
    }
  }
}

}  // namespace

ExploreReport explore(const PlaneGraph& g, int k, long long budget) {
  ExploreReport rep;
  rep.k = k;
  if (k < 1 || k > 15) throw ColoringError("explore: k out of supported range");
  // Guard against uint64 overflow of the packing.
  long double cap = 1.0L;
  for (int i = 0; i < g.n; ++i) cap *= k;
  if (cap > 9e18L && g.n > 1) {
    // The packing would overflow only if the state space is astronomically
    // large; such instances always exceed any sane budget.
    rep.budget_exceeded = true;
    rep.states = 0;
    return rep;
  }

  std::vector<uint64_t> codes;
  bool exceeded = false;
  enumerate_states(g, k, budget, codes, exceeded);
  rep.states = static_cast<long long>(codes.size());
  if (exceeded) {
    rep.budget_exceeded = true;
    return rep;
  }
  if (codes.empty()) return rep;

  Codec cod(g.n, k);
  auto index_of = [&](uint64_t code) {
    auto it = std::lower_bound(codes.begin(), codes.end(), code);
    return static_cast<int>(it - codes.begin());
  };

  // Neighbor expansion: all single-vertex proper recolorings.
  std::vector<int> cur(g.n);
  auto for_each_neighbor = [&](uint64_t code, auto&& fn) {
    for (int v = 0; v < g.n; ++v) cur[v] = cod.digit(code, v);
    for (int v = 0; v < g.n; ++v) {
      uint32_t seen = 0;
      for (int u : g.rot[v]) seen |= 1u << cur[u];
      for (int c = 1; c <= k; ++c) {
        if (c == cur[v] || (seen >> c & 1)) continue;
        fn(code + (static_cast<uint64_t>(c) - cur[v]) * cod.weight[v]);
      }
    }
  };

  // Flat adjacency over state indices, resolved once.
  std::vector<size_t> offset(codes.size() + 1, 0);
  for (size_t s = 0; s < codes.size(); ++s) {
    size_t cnt = 0;
    for_each_neighbor(codes[s], [&](uint64_t) { ++cnt; });
    offset[s + 1] = offset[s] + cnt;
    if (cnt == 0) ++rep.frozen;
  }
  std::vector<int> targets(offset.back());
  for (size_t s = 0, w = 0; s < codes.size(); ++s)
    for_each_neighbor(codes[s], [&](uint64_t nb) { targets[w++] = index_of(nb); });

  // Components.
  std::vector<int> comp(codes.size(), -1);
  int ncomp = 0;
  for (size_t s0 = 0; s0 < codes.size(); ++s0) {
    if (comp[s0] != -1) continue;
    std::deque<int> queue{static_cast<int>(s0)};
    comp[s0] = ncomp;
    long long size = 0;
    while (!queue.empty()) {
      int s = queue.front();
      queue.pop_front();
      ++size;
      for (size_t i = offset[s]; i < offset[s + 1]; ++i) {
        int t = targets[i];
        if (comp[t] == -1) {
          comp[t] = ncomp;
          queue.push_back(t);
        }
      }
    }
    rep.component_sizes.push_back(size);
    ++ncomp;
  }
  rep.connected = ncomp == 1;

  // Canonical representative of the color-permutation orbit: renumber
  // colors by first use along the vertex order.
  std::vector<int> rename(k + 1);
  auto canon_index = [&](uint64_t code) {
    std::fill(rename.begin(), rename.end(), 0);
    int next = 0;
    uint64_t out = 0;
    for (int v = 0; v < g.n; ++v) {
      int c = cod.digit(code, v);
      if (rename[c] == 0) rename[c] = ++next;
      out += static_cast<uint64_t>(rename[c] - 1) * cod.weight[v];
    }
    return index_of(out);
  };

  std::vector<int> canon(codes.size());
  for (size_t s = 0; s < codes.size(); ++s) canon[s] = canon_index(codes[s]);

  std::vector<int> reps = canon;
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  rep.orbits = static_cast<long long>(reps.size());

  // Eccentricity of each representative by BFS inside its component.
  std::vector<int> ecc_of_rep(codes.size(), -1);
  std::vector<int> dist(codes.size());
  for (int r : reps) {
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<int> queue{r};
    dist[r] = 0;
    int ecc = 0;
    while (!queue.empty()) {
      int s = queue.front();
      queue.pop_front();
      ecc = std::max(ecc, dist[s]);
      for (size_t i = offset[s]; i < offset[s + 1]; ++i) {
        int t = targets[i];
        if (dist[t] == -1) {
          dist[t] = dist[s] + 1;
          queue.push_back(t);
        }
      }
    }
    ecc_of_rep[r] = ecc;
  }

  rep.component_diameters.assign(ncomp, 0);
  for (size_t s = 0; s < codes.size(); ++s) {
    int e = ecc_of_rep[canon[s]];
    rep.component_diameters[comp[s]] = std::max(rep.component_diameters[comp[s]], e);
  }
  rep.diameter = *std::max_element(rep.component_diameters.begin(), rep.component_diameters.end());
  return rep;
}

}  // namespace rcp
