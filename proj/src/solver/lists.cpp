#include "rcp/solver/lists.hpp"

#include <algorithm>

namespace rcp {

AvailableLists compute_available_lists(const PlaneGraph& g, const Coloring& alpha,
                                       const std::vector<int>& members,
                                       const std::vector<int>& gamma_outside) {
  if (static_cast<int>(alpha.colors.size()) != g.n ||
      static_cast<int>(gamma_outside.size()) != g.n)
    throw ColoringError("available lists: coloring sizes do not match the graph");

  AvailableLists out;
  out.members = members;
  std::sort(out.members.begin(), out.members.end());
  std::vector<char> inside(g.n, 0);
  for (int v : out.members) {
    if (v < 0 || v >= g.n) throw ColoringError("available lists: member out of range");
    if (inside[v]) throw ColoringError("available lists: duplicate member");
    inside[v] = 1;
  }

  out.lists.reserve(out.members.size());
  for (int v : out.members) {
    uint16_t list = kFullList;
    int outside_neighbors = 0;
    int outside_tens = 0;
    for (int u : g.rot[v]) {
      if (inside[u]) continue;
      ++outside_neighbors;
      int a = alpha.colors[u];
      int c = gamma_outside[u];
      if (c < 1 || c > 9)
        throw ColoringError("available lists: outside final color not in 1..9");
      if (a == 10)
        ++outside_tens;
      else
        list &= static_cast<uint16_t>(~(1u << (a - 1)));
      list &= static_cast<uint16_t>(~(1u << (c - 1)));
    }
    int guaranteed = 9 - 2 * outside_neighbors + outside_tens;
    if (__builtin_popcount(list) < guaranteed)
      throw ColoringError("available lists: list smaller than the guaranteed size");
    out.lists.push_back(list);
  }
  return out;
}

Motif induced_motif(const PlaneGraph& g, const Coloring& alpha, const AvailableLists& avail) {
  Motif m;
  m.n = static_cast<int>(avail.members.size());
  m.adj.assign(m.n, 0);
  m.alpha.resize(m.n);
  m.lists = avail.lists;
  for (int i = 0; i < m.n; ++i) {
    m.alpha[i] = alpha.colors[avail.members[i]];
    for (int j = i + 1; j < m.n; ++j)
      if (g.has_edge(avail.members[i], avail.members[j])) m.add_edge(i, j);
  }
  return m;
}

}  // namespace rcp
