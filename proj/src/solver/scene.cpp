#include "rcp/solver/scene.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "rcp/discharge/appearance.hpp"
#include "rcp/motif/oo.hpp"
#include "rcp/solver/lists.hpp"

namespace rcp {

ReductionFailure::ReductionFailure(Motif m, std::string ctx)
    : std::runtime_error("no once-only recoloring exists for a motif that the reduction "
                         "argument guarantees to be solvable (" +
                         ctx + ")"),
      motif(std::move(m)),
      context(std::move(ctx)) {}

namespace {

// Lexicographic progress certificate: vertex count, then missing edges
// against the triangulation total, then vertices not colored 10. Every
// recursion step must strictly decrease it.
struct Measure {
  long n = 0;
  long missing_edges = 0;
  long missing_tens = 0;

  bool operator<(const Measure& o) const {
    if (n != o.n) return n < o.n;
    if (missing_edges != o.missing_edges) return missing_edges < o.missing_edges;
    return missing_tens < o.missing_tens;
  }
};

Measure measure_of(const PlaneGraph& g, const std::vector<int>& alpha) {
  long edges = 0;
  for (int v = 0; v < g.n; ++v) edges += static_cast<long>(g.rot[v].size());
  edges /= 2;
  long tens = static_cast<long>(std::count(alpha.begin(), alpha.end(), 10));
  return Measure{g.n, 3L * g.n - 6 - edges, g.n - tens};
}

struct FacePair {
  Face face;
  int u = -1;
  int v = -1;
};

// First face (in tracing order) carrying two distinct non-adjacent
// incident vertices, with the first such position pair.
std::optional<FacePair> find_face_pair(const PlaneGraph& g) {
  for (const Face& f : faces(g)) {
    int len = static_cast<int>(f.size());
    for (int i = 0; i < len; ++i)
      for (int j = i + 1; j < len; ++j) {
        if (f[i] == f[j] || g.has_edge(f[i], f[j])) continue;
        return FacePair{f, f[i], f[j]};
      }
  }
  return std::nullopt;
}

struct Ctx {
  const Catalog& catalog;
  SolveStats stats;
};

struct RecOut {
  RecolorSequence seq;
  std::vector<int> final;
};

RecOut solve_rec(const PlaneGraph& g, const std::vector<int>& alpha, Ctx& ctx,
                 const std::optional<Measure>& parent) {
  Measure me = measure_of(g, alpha);
  if (parent && !(me < *parent))
    throw std::logic_error("scene recursion failed to decrease its progress measure");

  RecOut out;
  out.final.assign(g.n, 0);
  if (g.n == 0) return out;

  auto comps = components(g);
  if (comps.size() > 1) {
    for (const auto& comp : comps) {
      auto sub = induced_subgraph(g, comp);
      std::vector<int> sub_alpha;
      sub_alpha.reserve(comp.size());
      for (int v : comp) sub_alpha.push_back(alpha[v]);
      RecOut r = solve_rec(sub.graph, sub_alpha, ctx, me);
      for (const auto& st : r.seq) out.seq.push_back({comp[st.vertex], st.color});
      for (size_t i = 0; i < comp.size(); ++i) out.final[comp[i]] = r.final[i];
    }
    return out;
  }

  // Complete a non-triangular face: insert the chord when the colors
  // differ, otherwise merge the two vertices and replay the merged
  // vertex's steps on both preimages.
  if (auto fp = find_face_pair(g)) {
    if (alpha[fp->u] != alpha[fp->v]) {
      ++ctx.stats.edge_insertions;
      PlaneGraph h = surgery_add_edge(g, fp->face, fp->u, fp->v);
      return solve_rec(h, alpha, ctx, me);
    }
    ++ctx.stats.identifications;
    VertexMapResult vm = surgery_identify(g, fp->face, fp->u, fp->v);
    std::vector<int> merged_alpha(vm.graph.n, 0);
    for (int w = 0; w < g.n; ++w) merged_alpha[vm.vertex_map[w]] = alpha[w];
    RecOut r = solve_rec(vm.graph, merged_alpha, ctx, me);
    std::vector<std::vector<int>> preimages(vm.graph.n);
    for (int w = 0; w < g.n; ++w) preimages[vm.vertex_map[w]].push_back(w);
    for (const auto& st : r.seq)
      for (int w : preimages[st.vertex]) out.seq.push_back({w, st.color});
    for (int w = 0; w < g.n; ++w) out.final[w] = r.final[vm.vertex_map[w]];
    return out;
  }

  // Plant color 10 where a closed neighborhood misses it; the planted
  // vertex later moves once more, to its final color.
  for (int v = 0; v < g.n; ++v) {
    if (alpha[v] == 10) continue;
    bool sees_ten = false;
    for (int u : g.rot[v]) sees_ten = sees_ten || alpha[u] == 10;
    if (sees_ten) continue;
    ++ctx.stats.ten_recolorings;
    std::vector<int> planted = alpha;
    planted[v] = 10;
    RecOut r = solve_rec(g, planted, ctx, me);
    out.seq.reserve(r.seq.size() + 1);
    out.seq.push_back({v, 10});
    out.seq.insert(out.seq.end(), r.seq.begin(), r.seq.end());
    out.final = std::move(r.final);
    return out;
  }

  // Peel a set whose induced motif is guaranteed once-only recolorable:
  // a vertex of degree at most four, or the image of a catalog
  // configuration. When a configuration hypothesis fails in alpha, the
  // violating pattern is itself such a set; use it instead.
  std::vector<int> members;
  std::string context;
  int low = 0;
  for (int v = 1; v < g.n; ++v)
    if (g.degree(v) < g.degree(low)) low = v;
  if (g.degree(low) <= 4) {
    ++ctx.stats.low_degree_peels;
    members = {low};
    context = "vertex of degree " + std::to_string(g.degree(low));
  } else {
    ++ctx.stats.configuration_peels;
    PlaneGraph gd = g;
    if (!gd.outer) {
      Face f0 = faces(gd).front();
      if (f0.size() != 3) throw std::logic_error("triangulated scene traced a non-triangle");
      gd.outer = std::array<int, 3>{f0[0], f0[1], f0[2]};
    }
    InducedAppearance ia = find_induced_configuration(gd, ctx.catalog);
    const ConfigurationTemplate& t = ctx.catalog.by_id(ia.appearance.config);
    const std::vector<int>& img = ia.appearance.injection;
    members = img;
    std::string used = t.id;
    for (const Hypothesis& h : t.hypotheses) {
      auto planted_ten = [&](size_t count) {
        for (size_t i = 0; i < count; ++i)
          if (alpha[img[h.verts[i]]] == 10) return true;
        return false;
      };
      if (h.kind == Hypothesis::Kind::Sat10) {
        // All neighbors of a saturated vertex lie in the pattern, so the
        // planting stage above guarantees a 10 in its closed pattern
        // neighborhood.
        int v = h.verts[0];
        bool seen = alpha[img[v]] == 10;
        for (int u = 0; u < t.n && !seen; ++u)
          seen = t.has_edge(v, u) && alpha[img[u]] == 10;
        if (!seen)
          throw std::logic_error("saturated configuration vertex misses color 10");
      } else if (h.kind == Hypothesis::Kind::Pair55 && !planted_ten(2)) {
        members = {img[h.verts[0]], img[h.verts[1]]};
        used = "pair55";
        break;
      } else if (h.kind == Hypothesis::Kind::Tri56 && !planted_ten(3)) {
        members = {img[h.verts[0]], img[h.verts[1]], img[h.verts[2]]};
        used = "tri56";
        break;
      } else if (h.kind == Hypothesis::Kind::Fan10 && !planted_ten(4)) {
        members = {img[h.verts[0]], img[h.verts[1]], img[h.verts[2]], img[h.verts[3]]};
        used = "fan10";
        break;
      }
    }
    ++ctx.stats.configs_used[used];
    context = used;
  }

  std::sort(members.begin(), members.end());
  std::vector<char> inside(g.n, 0);
  for (int v : members) inside[v] = 1;
  std::vector<int> rest;
  rest.reserve(g.n - members.size());
  for (int v = 0; v < g.n; ++v)
    if (!inside[v]) rest.push_back(v);

  auto sub = induced_subgraph(g, rest);
  std::vector<int> rest_alpha;
  rest_alpha.reserve(rest.size());
  for (int v : rest) rest_alpha.push_back(alpha[v]);
  RecOut r = solve_rec(sub.graph, rest_alpha, ctx, me);

  std::vector<int> gamma_outside(g.n, 0);
  for (size_t i = 0; i < rest.size(); ++i) gamma_outside[rest[i]] = r.final[i];
  Coloring alpha_c{10, alpha};
  AvailableLists avail = compute_available_lists(g, alpha_c, members, gamma_outside);
  Motif motif = induced_motif(g, alpha_c, avail);
  OOResult oo = oo_recolorable(motif);
  if (!oo.yes) throw ReductionFailure(motif, context);

  for (int v : oo.witness.order)
    out.seq.push_back({avail.members[v], oo.witness.gamma[v]});
  for (const auto& st : r.seq) out.seq.push_back({rest[st.vertex], st.color});
  for (size_t i = 0; i < avail.members.size(); ++i)
    out.final[avail.members[i]] = oo.witness.gamma[i];
  for (size_t i = 0; i < rest.size(); ++i) out.final[rest[i]] = r.final[i];
  return out;
}

}  // namespace

SolveResult solve_scene(const Scene& scene) { return solve_scene(scene, default_catalog()); }

SolveResult solve_scene(const Scene& scene, const Catalog& catalog) {
  validate(scene.graph);
  if (static_cast<int>(scene.alpha.colors.size()) != scene.graph.n)
    throw ColoringError("scene coloring size does not match the graph");
  if (scene.alpha.k != 10) throw ColoringError("scene coloring must range over 1..10");
  for (int c : scene.alpha.colors)
    if (c < 1 || c > 10) throw ColoringError("scene color out of range");
  if (!is_proper(scene.graph, scene.alpha)) throw ColoringError("scene coloring is not proper");

  Ctx ctx{catalog, {}};
  RecOut r = solve_rec(scene.graph, scene.alpha.colors, ctx, std::nullopt);

  SolveResult res;
  res.sequence = std::move(r.seq);
  res.final = Coloring{9, std::move(r.final)};
  res.stats = std::move(ctx.stats);

  SequenceReport rep = verify_valid_sequence(scene, res.sequence);
  if (!rep.valid)
    throw std::logic_error("scene solver emitted an invalid sequence: " + rep.error);
  if (rep.final.colors != res.final.colors)
    throw std::logic_error("scene solver final coloring does not match its replay");
  if (res.sequence.size() > 2 * static_cast<size_t>(scene.graph.n))
    throw std::logic_error("scene solver exceeded the two-per-vertex length bound");
  return res;
}

}  // namespace rcp
