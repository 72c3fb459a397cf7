#include <algorithm>
#include <set>

#include "rcp/embed/plane_graph.hpp"

namespace rcp {

namespace {

// Corner of the first occurrence of u on the face walk: returns the walk
// predecessor x of that occurrence; the rotation insert slot is before x.
int corner_predecessor(const Face& face, int u) {
  for (size_t i = 0; i < face.size(); ++i)
    if (face[i] == u) return face[(i + face.size() - 1) % face.size()];
  throw GraphError("vertex " + std::to_string(u) + " is not on the given face");
}

void insert_before(std::vector<int>& r, int anchor, int value) {
  for (size_t i = 0; i < r.size(); ++i)
    if (r[i] == anchor) {
      r.insert(r.begin() + i, value);
      return;
    }
  throw GraphError("rotation anchor missing");
}

bool face_matches_triple(const Face& f, const std::array<int, 3>& t) {
  if (f.size() != 3) return false;
  for (int s = 0; s < 3; ++s)
    if (f[s] == t[0] && f[(s + 1) % 3] == t[1] && f[(s + 2) % 3] == t[2])
      return true;
  return false;
}

std::optional<std::array<int, 3>> remap_outer(const PlaneGraph& g) {
  if (!g.outer) return std::nullopt;
  for (const auto& f : faces(g))
    if (face_matches_triple(f, *g.outer)) return g.outer;
  return std::nullopt;
}

}  // namespace

PlaneGraph surgery_add_edge(const PlaneGraph& g, const Face& face, int u, int v) {
  if (u == v) throw GraphError("chord endpoints coincide");
  if (g.has_edge(u, v)) throw GraphError("chord endpoints already adjacent");
  PlaneGraph h = g;
  int xu = corner_predecessor(face, u);
  int xv = corner_predecessor(face, v);
  insert_before(h.rot[u], xu, v);
  insert_before(h.rot[v], xv, u);
  h.outer = remap_outer(h);
  return h;
}

VertexMapResult surgery_identify(const PlaneGraph& g, const Face& face, int u, int v) {
  if (u == v) throw GraphError("identification endpoints coincide");
  if (g.has_edge(u, v)) throw GraphError("identification endpoints are adjacent");
  int xu = corner_predecessor(face, u);
  int xv = corner_predecessor(face, v);

  // Read rot[u] starting at xu and rot[v] starting at xv; their
  // concatenation is the merged rotation (chord-contraction splice).
  auto read_from = [&](int w, int start) {
    const auto& r = g.rot[w];
    int s = g.rot_index(w, start);
    std::vector<int> out;
    for (size_t i = 0; i < r.size(); ++i) out.push_back(r[(s + i) % r.size()]);
    return out;
  };
  std::vector<int> part_u = read_from(u, xu);
  std::vector<int> part_v = read_from(v, xv);

  PlaneGraph h;
  h.n = g.n;
  h.rot = g.rot;

  std::vector<int> merged = part_u;
  std::set<int> dup;
  for (int w : part_u) dup.insert(w);
  for (int w : part_v) {
    if (dup.count(w)) {
      // Parallel edge: drop this v-side instance, and remove the v-entry
      // from w's rotation.
      auto& rw = h.rot[w];
      rw.erase(rw.begin() + h.rot_index(w, v));
    } else {
      merged.push_back(w);
      dup.insert(w);
    }
  }
  // Remaining v-entries in neighbor rotations become u-entries.
  for (int w : merged)
    for (auto& x : h.rot[w])
      if (x == v) x = u;
  h.rot[u] = merged;
  h.rot[v].clear();

  // Compact ids, dropping v.
  std::vector<int> vertex_map(g.n, -1);
  int next_id = 0;
  for (int w = 0; w < g.n; ++w) {
    if (w == v) continue;
    vertex_map[w] = next_id++;
  }
  vertex_map[v] = vertex_map[u];

  PlaneGraph out;
  out.n = g.n - 1;
  out.rot.resize(out.n);
  for (int w = 0; w < g.n; ++w) {
    if (w == v) continue;
    auto& r = out.rot[vertex_map[w]];
    r.reserve(h.rot[w].size());
    for (int x : h.rot[w]) r.push_back(vertex_map[x]);
  }
  if (g.outer) {
    std::array<int, 3> t{vertex_map[(*g.outer)[0]], vertex_map[(*g.outer)[1]], vertex_map[(*g.outer)[2]]};
    out.outer = t;
    out.outer = remap_outer(out);
  }
  return VertexMapResult{std::move(out), std::move(vertex_map)};
}

SubgraphResult induced_subgraph(const PlaneGraph& g, const std::vector<int>& keep) {
  std::vector<int> new_id(g.n, -1);
  for (size_t i = 0; i < keep.size(); ++i) {
    int v = keep[i];
    if (v < 0 || v >= g.n) throw GraphError("subgraph vertex out of range");
    if (new_id[v] != -1) throw GraphError("duplicate subgraph vertex");
    new_id[v] = static_cast<int>(i);
  }
  PlaneGraph out;
  out.n = static_cast<int>(keep.size());
  out.rot.resize(out.n);
  for (size_t i = 0; i < keep.size(); ++i)
    for (int w : g.rot[keep[i]])
      if (new_id[w] != -1) out.rot[i].push_back(new_id[w]);
  if (g.outer) {
    const auto& t = *g.outer;
    if (new_id[t[0]] != -1 && new_id[t[1]] != -1 && new_id[t[2]] != -1) {
      out.outer = std::array<int, 3>{new_id[t[0]], new_id[t[1]], new_id[t[2]]};
      out.outer = remap_outer(out);
    }
  }
  return SubgraphResult{std::move(out), keep};
}

PlaneGraph delete_edge(const PlaneGraph& g, int u, int v) {
  if (!g.has_edge(u, v)) throw GraphError("deleting a non-edge");
  PlaneGraph h = g;
  h.rot[u].erase(h.rot[u].begin() + h.rot_index(u, v));
  h.rot[v].erase(h.rot[v].begin() + h.rot_index(v, u));
  h.outer = remap_outer(h);
  return h;
}

}  // namespace rcp
