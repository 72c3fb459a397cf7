#include "rcp/solver/transform.hpp"

#include <algorithm>
#include <optional>

#include "rcp/solver/degenerate.hpp"
#include "rcp/util/rng.hpp"

namespace rcp {

namespace {

bool three_degenerate(const PlaneGraph& g, const std::vector<int>& verts) {
  if (verts.empty()) return true;
  auto sub = induced_subgraph(g, verts);
  return degeneracy_order(sub.graph).degeneracy <= 3;
}

// Complete assignment search: vertices in degree-descending order, each
// sent to the degenerate side first; partial degenerate sides that already
// fail the peel test are pruned, which is sound because induced subgraphs
// of 3-degenerate graphs stay 3-degenerate.
bool exact_search(const PlaneGraph& g, const std::vector<int>& order, size_t at,
                  std::vector<char>& in_ind, std::vector<int>& rest, long long& budget,
                  std::vector<int>& ind_out) {
  if (budget-- <= 0) return false;
  if (at == order.size()) return true;
  int v = order[at];

  rest.push_back(v);
  std::vector<int> sorted_rest = rest;
  std::sort(sorted_rest.begin(), sorted_rest.end());
  if (three_degenerate(g, sorted_rest) &&
      exact_search(g, order, at + 1, in_ind, rest, budget, ind_out))
    return true;
  rest.pop_back();

  bool blocked = false;
  for (int u : g.rot[v]) blocked = blocked || in_ind[u];
  if (!blocked) {
    in_ind[v] = 1;
    ind_out.push_back(v);
    if (exact_search(g, order, at + 1, in_ind, rest, budget, ind_out)) return true;
    ind_out.pop_back();
    in_ind[v] = 0;
  }
  return false;
}

std::optional<Partition> greedy_attempt(const PlaneGraph& g, Rng& rng) {
  std::vector<char> remaining(g.n, 1), blocked(g.n, 0);
  std::vector<int> deg(g.n, 0);
  for (int v = 0; v < g.n; ++v) deg[v] = g.degree(v);
  Partition part;
  int left = g.n;
  while (left > 0) {
    int pick = -1;
    for (int v = 0; v < g.n; ++v)
      if (remaining[v] && deg[v] <= 3 && (pick == -1 || deg[v] < deg[pick])) pick = v;
    bool to_rest = pick != -1;
    if (!to_rest) {
      // No vertex can be peeled; park a highest-degree unblocked vertex
      // on the independent side, breaking ties by the seeded stream.
      std::vector<int> cands;
      int best = -1;
      for (int v = 0; v < g.n; ++v) {
        if (!remaining[v] || blocked[v]) continue;
        if (best == -1 || deg[v] > deg[best]) {
          best = v;
          cands = {v};
        } else if (deg[v] == deg[best]) {
          cands.push_back(v);
        }
      }
      if (cands.empty()) return std::nullopt;
      pick = cands[rng.below(cands.size())];
    }
    remaining[pick] = 0;
    --left;
    for (int u : g.rot[pick])
      if (remaining[u]) --deg[u];
    if (to_rest) {
      part.rest.push_back(pick);
    } else {
      part.independent.push_back(pick);
      for (int u : g.rot[pick]) blocked[u] = 1;
    }
  }
  std::sort(part.independent.begin(), part.independent.end());
  std::sort(part.rest.begin(), part.rest.end());
  return part;
}

void check_partition(const PlaneGraph& g, const Partition& part) {
  for (int v : part.independent)
    for (int u : g.rot[v])
      if (std::binary_search(part.independent.begin(), part.independent.end(), u))
        throw std::logic_error("partition independent set carries an edge");
  if (part.independent.size() + part.rest.size() != static_cast<size_t>(g.n))
    throw std::logic_error("partition does not cover the graph");
  if (!three_degenerate(g, part.rest))
    throw std::logic_error("partition rest is not 3-degenerate");
}

}  // namespace

Partition thomassen_partition(const PlaneGraph& g, const PartitionOptions& opts) {
  Partition part;
  if (g.n == 0) return part;
  if (g.n <= opts.exact_cap) {
    std::vector<int> order(g.n);
    for (int v = 0; v < g.n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b)
                                                                    : a < b; });
    std::vector<char> in_ind(g.n, 0);
    std::vector<int> rest, ind;
    long long budget = opts.node_budget;
    if (exact_search(g, order, 0, in_ind, rest, budget, ind)) {
      part.independent = ind;
      part.rest = rest;
      std::sort(part.independent.begin(), part.independent.end());
      std::sort(part.rest.begin(), part.rest.end());
      part.exact = true;
      check_partition(g, part);
      return part;
    }
    // Fall through to the greedy phase when the node budget ran out.
  }
  for (int attempt = 0; attempt < opts.restarts; ++attempt) {
    Rng rng(mix_seed(opts.seed, 0x70617274u + static_cast<uint64_t>(attempt)));
    auto got = greedy_attempt(g, rng);
    if (got) {
      check_partition(g, *got);
      return *got;
    }
  }
  throw GraphError("no independent/3-degenerate split found within " +
                   std::to_string(opts.restarts) + " greedy restarts");
}

TransformResult transform_10(const PlaneGraph& g, const Coloring& alpha, const Coloring& beta) {
  return transform_10(g, alpha, beta, default_catalog());
}

TransformResult transform_10(const PlaneGraph& g, const Coloring& alpha, const Coloring& beta,
                             const Catalog& catalog, const PartitionOptions& opts) {
  auto check_endpoint = [&](const Coloring& c, const char* name) {
    if (static_cast<int>(c.colors.size()) != g.n)
      throw ColoringError(std::string("transform: ") + name +
                          " coloring size does not match the graph");
    if (c.k != 10)
      throw ColoringError(std::string("transform: ") + name + " coloring must use k = 10");
    for (int v = 0; v < g.n; ++v) {
      if (c.colors[v] < 1 || c.colors[v] > 10)
        throw ColoringError(std::string("transform: ") + name + " color out of range");
      for (int u : g.rot[v])
        if (u > v && c.colors[u] == c.colors[v])
          throw ColoringError(std::string("transform: ") + name + " coloring is not proper");
    }
  };
  check_endpoint(alpha, "start");
  check_endpoint(beta, "target");
  TransformResult out;
  if (alpha.colors == beta.colors) return out;

  SolveResult down = solve_scene(Scene{g, alpha}, catalog);
  SolveResult up = solve_scene(Scene{g, beta}, catalog);
  Partition part = thomassen_partition(g, opts);
  out.independent = part.independent;
  out.first_stats = std::move(down.stats);
  out.second_stats = std::move(up.stats);

  RecolorSequence seq = down.sequence;
  out.first_length = seq.size();

  size_t middle_start = seq.size();
  for (int v : part.independent) seq.push_back({v, 10});

  auto sub = induced_subgraph(g, part.rest);
  auto restrict_to_rest = [&](const Coloring& full) {
    Coloring c{9, {}};
    c.colors.reserve(part.rest.size());
    for (int v : part.rest) c.colors.push_back(full.colors[v]);
    return c;
  };
  RecolorSequence walk = recolor_degenerate(sub.graph, restrict_to_rest(down.final),
                                            restrict_to_rest(up.final), 9);
  for (const auto& st : walk) seq.push_back({part.rest[st.vertex], st.color});
  for (auto it = part.independent.rbegin(); it != part.independent.rend(); ++it)
    seq.push_back({*it, up.final.colors[*it]});
  out.middle_length = seq.size() - middle_start;

  // Replay the beta-side sequence to record the color each step replaced,
  // then emit the inverse steps in reverse order.
  std::vector<int> cur = beta.colors;
  std::vector<RecolorStep> inverse;
  inverse.reserve(up.sequence.size());
  for (const auto& st : up.sequence) {
    inverse.push_back({st.vertex, cur[st.vertex]});
    cur[st.vertex] = st.color;
  }
  for (auto it = inverse.rbegin(); it != inverse.rend(); ++it) seq.push_back(*it);
  out.second_length = up.sequence.size();

  std::string replay = check_recoloring_path(g, alpha, seq, beta);
  if (!replay.empty()) throw std::logic_error("transform replay failed: " + replay);
  size_t bound = 8 * static_cast<size_t>(g.n) - 2 * part.independent.size();
  if (seq.size() > bound)
    throw std::logic_error("transform exceeded its length bound");
  out.sequence = std::move(seq);
  return out;
}

}  // namespace rcp
