#include "rcp/discharge/appearance.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace rcp {
namespace {

// Wheel adjacency over local ids: 0 is the center, 1..d the rim in rotation
// order.  Spokes plus the rim cycle only; ambient chords are deliberately
// not part of the wheel.
struct WheelGraph {
  std::vector<int> verts;               // local id -> graph vertex
  std::vector<std::uint64_t> adj;       // local adjacency masks
};

WheelGraph wheel_graph(const Wheel& w) {
  int d = static_cast<int>(w.rim.size());
  WheelGraph wg;
  wg.verts.push_back(w.center);
  for (int v : w.rim) wg.verts.push_back(v);
  wg.adj.assign(d + 1, 0);
  auto link = [&](int a, int b) {
    wg.adj[a] |= 1ull << b;
    wg.adj[b] |= 1ull << a;
  };
  for (int i = 1; i <= d; ++i) link(0, i);
  for (int i = 0; i < d; ++i) link(1 + i, 1 + (i + 1) % d);
  return wg;
}

struct Searcher {
  const PlaneGraph& g;
  const ConfigurationTemplate& t;
  const WheelGraph& wg;
  const std::vector<char>& on_outer;
  std::vector<std::uint32_t> tadj;
  std::vector<int> image;     // template vertex -> local wheel id
  std::uint64_t used = 0;

  bool extend(int x) {
    if (x == t.n) return true;
    for (int cand = 0; cand < static_cast<int>(wg.verts.size()); ++cand) {
      if (used >> cand & 1) continue;
      int gv = wg.verts[cand];
      if (on_outer[gv]) continue;
      if (g.degree(gv) > mark_bound(t.marks[x])) continue;
      bool ok = true;
      for (int y = 0; y < x && ok; ++y) {
        bool in_t = tadj[x] >> y & 1;
        bool in_w = wg.adj[cand] >> image[y] & 1;
        if (in_t != in_w) ok = false;
      }
      if (!ok) continue;
      image[x] = cand;
      used |= 1ull << cand;
      if (extend(x + 1)) return true;
      used &= ~(1ull << cand);
    }
    return false;
  }
};

}  // namespace

std::optional<Appearance> find_appearance(const PlaneGraph& g, const Catalog& cat) {
  auto rep = validate_triangulation(g);
  if (!rep.is_triangulation) throw GraphError("appearance search needs a triangulation");
  if (!g.outer) throw GraphError("appearance search needs the outer face set");
  if (g.n < 4) throw GraphError("appearance search needs at least four vertices");
  std::vector<char> on_outer(g.n, 0);
  for (int v : *g.outer) on_outer[v] = 1;
  for (int v = 0; v < g.n; ++v)
    if (!on_outer[v] && g.degree(v) < 5)
      throw GraphError("appearance search needs inner degrees of at least five");

  for (int center = 0; center < g.n; ++center) {
    Wheel w = wheel_of(g, center);
    if (w.rim.size() < 3 || w.rim.size() + 1 > 64) continue;
    WheelGraph wg = wheel_graph(w);
    for (const auto& t : cat.templates) {
      if (t.n > static_cast<int>(wg.verts.size())) continue;
      Searcher s{g, t, wg, on_outer, {}, std::vector<int>(t.n, -1), 0};
      s.tadj = t.adjacency_masks();
      if (s.extend(0)) {
        Appearance a;
        a.config = t.id;
        a.center = w.center;
        a.rim = w.rim;
        a.injection.reserve(t.n);
        for (int x = 0; x < t.n; ++x) a.injection.push_back(wg.verts[s.image[x]]);
        return a;
      }
    }
  }
  return std::nullopt;
}

InducedAppearance find_induced_configuration(const PlaneGraph& g, const Catalog& cat) {
  auto rep = validate_triangulation(g);
  if (!rep.is_triangulation)
    throw GraphError("induced configuration search needs a triangulation");
  if (!g.outer) throw GraphError("induced configuration search needs the outer face set");
  if (g.n < 4) throw GraphError("induced configuration search needs at least four vertices");
  {
    std::vector<char> on_outer(g.n, 0);
    for (int v : *g.outer) on_outer[v] = 1;
    for (int v = 0; v < g.n; ++v)
      if (!on_outer[v] && g.degree(v) < 5)
        throw GraphError("induced configuration search needs inner degrees of at least five");
  }

  InducedAppearance out;
  auto seps = separating_triangles(g);
  std::optional<Appearance> found;
  if (seps.empty()) {
    out.disk_triangle = {(*g.outer)[0], (*g.outer)[1], (*g.outer)[2]};
    out.disk_vertices.resize(g.n);
    for (int v = 0; v < g.n; ++v) out.disk_vertices[v] = v;
    found = find_appearance(g, cat);
  } else {
    const auto& sep = seps.front();  // innermost: smallest interior
    out.used_separating_triangle = true;
    out.disk_triangle = sep.tri;
    out.disk_vertices = sep.interior;
    for (int v : sep.tri) out.disk_vertices.push_back(v);
    std::sort(out.disk_vertices.begin(), out.disk_vertices.end());
    auto sub = induced_subgraph(g, out.disk_vertices);
    // The triangle bounds the empty former-outside, so it is traced as a
    // face of the subgraph; designate it as the outer face.
    bool set = false;
    for (const auto& f : faces(sub.graph)) {
      if (f.size() != 3) continue;
      std::array<int, 3> ids{sub.old_ids[f[0]], sub.old_ids[f[1]], sub.old_ids[f[2]]};
      std::array<int, 3> sorted = ids;
      std::sort(sorted.begin(), sorted.end());
      if (sorted == sep.tri) {
        sub.graph.outer = std::array<int, 3>{f[0], f[1], f[2]};
        set = true;
        break;
      }
    }
    if (!set) throw GraphError("separating triangle is not a face of its disk");
    validate(sub.graph);
    found = find_appearance(sub.graph, cat);
    if (found) {
      found->center = sub.old_ids[found->center];
      for (int& v : found->rim) v = sub.old_ids[v];
      for (int& v : found->injection) v = sub.old_ids[v];
    }
  }
  if (!found)
    throw std::logic_error(
        "no catalog configuration appears although one is guaranteed to");
  // Inside the chosen disk the wheel is induced, so the injection must be
  // induced in the ambient graph with ambient degrees; check both.
  const auto& t = cat.by_id(found->config);
  for (int x = 0; x < t.n; ++x) {
    int gx = found->injection[x];
    if (g.degree(gx) > mark_bound(t.marks[x]))
      throw std::logic_error("appearance image exceeds its ambient degree mark");
    for (int y = x + 1; y < t.n; ++y) {
      int gy = found->injection[y];
      if (t.has_edge(x, y) != g.has_edge(gx, gy))
        throw std::logic_error("appearance is not induced in the ambient graph");
    }
  }
  out.appearance = *found;
  return out;
}

}  // namespace rcp
