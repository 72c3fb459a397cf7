#include "rcp/catalog/family.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace rcp {

std::vector<std::vector<int>> template_automorphisms(const ConfigurationTemplate& t) {
  std::vector<std::vector<int>> out;
  std::vector<int> perm(t.n);
  std::iota(perm.begin(), perm.end(), 0);
  auto adj = t.adjacency_masks();
  do {
    bool ok = true;
    for (int v = 0; v < t.n && ok; ++v) {
      if (t.marks[perm[v]] != t.marks[v]) ok = false;
      uint32_t image = 0;
      for (int u = 0; u < t.n; ++u)
        if (adj[v] >> u & 1) image |= 1u << perm[u];
      if (image != adj[perm[v]]) ok = false;
    }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<int> renumber_first_use(const std::vector<int>& alpha) {
  std::vector<int> map(11, 0);
  int next = 1;
  std::vector<int> out(alpha.size());
  for (size_t i = 0; i < alpha.size(); ++i) {
    int c = alpha[i];
    if (c == 10) {
      out[i] = 10;
      continue;
    }
    if (map[c] == 0) map[c] = next++;
    out[i] = map[c];
  }
  return out;
}

std::vector<int> canonical_alpha(const ConfigurationTemplate& t,
                                 const std::vector<int>& alpha,
                                 const std::vector<std::vector<int>>& autos) {
  std::vector<int> best;
  std::vector<int> image(t.n);
  for (const auto& perm : autos) {
    for (int v = 0; v < t.n; ++v) image[perm[v]] = alpha[v];
    auto candidate = renumber_first_use(image);
    if (best.empty() || candidate < best) best = candidate;
  }
  return best;
}

namespace {

void enumerate_rec(const ConfigurationTemplate& t, const std::vector<uint32_t>& adj,
                   std::vector<int>& alpha, int v, int used,
                   const std::vector<std::vector<int>>& autos,
                   std::set<std::vector<int>>& seen,
                   std::vector<std::vector<int>>& out) {
  if (v == t.n) {
    if (!alpha_satisfies(t, alpha)) return;
    auto canon = canonical_alpha(t, alpha, autos);
    if (seen.insert(canon).second) out.push_back(canon);
    return;
  }
  // Fresh colorings only: 10, any color already used, or the next new color.
  for (int c = 1; c <= std::min(used + 1, 9); ++c) {
    bool clash = false;
    for (int u = 0; u < v && !clash; ++u)
      if (adj[v] >> u & 1 && alpha[u] == c) clash = true;
    if (clash) continue;
    alpha[v] = c;
    enumerate_rec(t, adj, alpha, v + 1, std::max(used, c), autos, seen, out);
  }
  bool clash10 = false;
  for (int u = 0; u < v && !clash10; ++u)
    if (adj[v] >> u & 1 && alpha[u] == 10) clash10 = true;
  if (!clash10) {
    alpha[v] = 10;
    enumerate_rec(t, adj, alpha, v + 1, used, autos, seen, out);
  }
  alpha[v] = 0;
}

void count_rec(const ConfigurationTemplate& t, const std::vector<uint32_t>& adj,
               std::vector<int>& alpha, int v, int colors, uint64_t& total) {
  if (v == t.n) {
    if (alpha_satisfies(t, alpha)) ++total;
    return;
  }
  auto try_color = [&](int c) {
    for (int u = 0; u < v; ++u)
      if (adj[v] >> u & 1 && alpha[u] == c) return;
    alpha[v] = c;
    count_rec(t, adj, alpha, v + 1, colors, total);
    alpha[v] = 0;
  };
  for (int c = 1; c <= colors - 1; ++c) try_color(c);
  try_color(10);
}

}  // namespace

std::vector<std::vector<int>> enumerate_alpha_classes(const ConfigurationTemplate& t) {
  auto autos = template_automorphisms(t);
  auto adj = t.adjacency_masks();
  std::vector<int> alpha(t.n, 0);
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> out;
  enumerate_rec(t, adj, alpha, 0, 0, autos, seen, out);
  std::sort(out.begin(), out.end());
  return out;
}

uint64_t count_alpha_colorings(const ConfigurationTemplate& t, int colors) {
  auto adj = t.adjacency_masks();
  std::vector<int> alpha(t.n, 0);
  uint64_t total = 0;
  count_rec(t, adj, alpha, 0, colors, total);
  return total;
}

}  // namespace rcp
