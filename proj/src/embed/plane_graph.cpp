#include "rcp/embed/plane_graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "rcp/util/text.hpp"

namespace rcp {

int PlaneGraph::edge_count() const {
  size_t total = 0;
  for (const auto& r : rot) total += r.size();
  return static_cast<int>(total / 2);
}

bool PlaneGraph::has_edge(int u, int v) const {
  if (u < 0 || u >= n) return false;
  for (int w : rot[u])
    if (w == v) return true;
  return false;
}

int PlaneGraph::rot_index(int v, int u) const {
  const auto& r = rot[v];
  for (size_t i = 0; i < r.size(); ++i)
    if (r[i] == u) return static_cast<int>(i);
  return -1;
}

namespace {

// Directed edge (u -> v) identified by (u, position of v in rot[u]).
struct DartIndex {
  const PlaneGraph& g;
  std::vector<size_t> offset;
  explicit DartIndex(const PlaneGraph& g_) : g(g_), offset(g_.n + 1, 0) {
    for (int v = 0; v < g.n; ++v) offset[v + 1] = offset[v] + g.rot[v].size();
  }
  size_t id(int u, int pos) const { return offset[u] + pos; }
  size_t total() const { return offset[g.n]; }
};

// Successor of the directed edge (u -> v) under the predecessor rule.
void next_dart(const PlaneGraph& g, int& u, int& v) {
  int idx = g.rot_index(v, u);
  int deg = g.degree(v);
  int w = g.rot[v][(idx - 1 + deg) % deg];
  u = v;
  v = w;
}

bool face_matches_triple(const Face& f, const std::array<int, 3>& t) {
  if (f.size() != 3) return false;
  for (int s = 0; s < 3; ++s)
    if (f[s] == t[0] && f[(s + 1) % 3] == t[1] && f[(s + 2) % 3] == t[2])
      return true;
  return false;
}

}  // namespace

std::vector<Face> faces(const PlaneGraph& g) {
  DartIndex di(g);
  std::vector<char> seen(di.total(), 0);
  std::vector<Face> out;
  for (int u0 = 0; u0 < g.n; ++u0) {
    for (int p0 = 0; p0 < g.degree(u0); ++p0) {
      if (seen[di.id(u0, p0)]) continue;
      Face walk;
      int u = u0, v = g.rot[u0][p0];
      while (true) {
        int pos = g.rot_index(u, v);
        size_t d = di.id(u, pos);
        if (seen[d]) break;
        seen[d] = 1;
        walk.push_back(u);
        next_dart(g, u, v);
      }
      out.push_back(std::move(walk));
    }
  }
  return out;
}

std::vector<std::vector<int>> components(const PlaneGraph& g) {
  std::vector<int> comp(g.n, -1);
  int nc = 0;
  for (int s = 0; s < g.n; ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> stack{s};
    comp[s] = nc;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.rot[v])
        if (comp[w] == -1) {
          comp[w] = nc;
          stack.push_back(w);
        }
    }
    ++nc;
  }
  std::vector<std::vector<int>> out(nc);
  for (int v = 0; v < g.n; ++v) out[comp[v]].push_back(v);
  return out;
}

void validate(const PlaneGraph& g) {
  if (g.n < 0) throw GraphError("negative vertex count");
  if (static_cast<int>(g.rot.size()) != g.n)
    throw GraphError("rotation table size differs from n");
  for (int v = 0; v < g.n; ++v) {
    std::set<int> seen;
    for (int w : g.rot[v]) {
      if (w < 0 || w >= g.n)
        throw GraphError("vertex " + std::to_string(v) + " lists out-of-range neighbor " + std::to_string(w));
      if (w == v) throw GraphError("self-loop at vertex " + std::to_string(v));
      if (!seen.insert(w).second)
        throw GraphError("duplicate neighbor " + std::to_string(w) + " at vertex " + std::to_string(v));
    }
  }
  for (int v = 0; v < g.n; ++v)
    for (int w : g.rot[v])
      if (g.rot_index(w, v) < 0)
        throw GraphError("asymmetric adjacency " + std::to_string(v) + "-" + std::to_string(w));

  // Per-component Euler formula under face tracing.
  auto comps = components(g);
  auto all_faces = faces(g);
  std::vector<int> comp_of(g.n, -1);
  for (size_t c = 0; c < comps.size(); ++c)
    for (int v : comps[c]) comp_of[v] = static_cast<int>(c);
  std::vector<int> fcount(comps.size(), 0), mtwice(comps.size(), 0);
  for (const auto& f : all_faces)
    if (!f.empty()) fcount[comp_of[f[0]]]++;
  for (int v = 0; v < g.n; ++v) mtwice[comp_of[v]] += g.degree(v);
  for (size_t c = 0; c < comps.size(); ++c) {
    int nc = static_cast<int>(comps[c].size());
    int mc = mtwice[c] / 2;
    int fc = fcount[c];
    if (nc == 1 && mc == 0) continue;  // isolated vertex: no darts, no faces
    if (nc - mc + fc != 2)
      throw GraphError("component containing vertex " + std::to_string(comps[c][0]) +
                       " violates the sphere Euler formula: n=" + std::to_string(nc) +
                       " m=" + std::to_string(mc) + " f=" + std::to_string(fc));
  }

  if (g.outer) {
    const auto& t = *g.outer;
    for (int x : t)
      if (x < 0 || x >= g.n) throw GraphError("outer face lists an out-of-range vertex");
    bool found = false;
    for (const auto& f : all_faces)
      if (face_matches_triple(f, t)) {
        found = true;
        break;
      }
    if (!found) throw GraphError("designated outer face is not a traced triangular face");
  }
}

TriangulationReport validate_triangulation(const PlaneGraph& g) {
  TriangulationReport rep;
  rep.degrees.resize(g.n);
  rep.min_degree = g.n == 0 ? 0 : g.degree(0);
  for (int v = 0; v < g.n; ++v) {
    rep.degrees[v] = g.degree(v);
    rep.min_degree = std::min(rep.min_degree, rep.degrees[v]);
  }
  rep.connected = components(g).size() <= 1;
  if (!rep.connected) rep.issues.push_back("graph is disconnected");
  bool all_triangles = true;
  for (const auto& f : faces(g))
    if (f.size() != 3) {
      all_triangles = false;
      rep.issues.push_back("face of length " + std::to_string(f.size()));
      break;
    }
  if (g.n < 3) {
    all_triangles = false;
    rep.issues.push_back("fewer than three vertices");
  }
  rep.is_triangulation = rep.connected && all_triangles;
  return rep;
}

Wheel wheel_of(const PlaneGraph& g, int center) {
  if (center < 0 || center >= g.n) throw GraphError("wheel center out of range");
  return Wheel{center, g.rot[center]};
}

bool wheel_rim_closed(const PlaneGraph& g, const Wheel& w) {
  int k = static_cast<int>(w.rim.size());
  if (k < 3) return false;
  for (int i = 0; i < k; ++i)
    if (!g.has_edge(w.rim[i], w.rim[(i + 1) % k])) return false;
  return true;
}

std::vector<SeparatingTriangle> separating_triangles(const PlaneGraph& g) {
  auto all_faces = faces(g);
  // Dual adjacency via shared undirected edges: record for each undirected
  // edge the (at most two) faces using it.
  std::map<std::pair<int, int>, std::vector<int>> edge_faces;
  for (size_t fi = 0; fi < all_faces.size(); ++fi) {
    const auto& f = all_faces[fi];
    for (size_t i = 0; i < f.size(); ++i) {
      int a = f[i], b = f[(i + 1) % f.size()];
      edge_faces[{std::min(a, b), std::max(a, b)}].push_back(static_cast<int>(fi));
    }
  }

  int outer_face_idx = -1;
  if (g.outer) {
    for (size_t fi = 0; fi < all_faces.size(); ++fi)
      if (face_matches_triple(all_faces[fi], *g.outer)) {
        outer_face_idx = static_cast<int>(fi);
        break;
      }
  }

  std::vector<SeparatingTriangle> out;
  for (int u = 0; u < g.n; ++u)
    for (int v : g.rot[u]) {
      if (v <= u) continue;
      for (int w : g.rot[u]) {
        if (w <= v || !g.has_edge(v, w)) continue;
        // Triangle u < v < w. Split the dual along its three edges.
        std::set<std::pair<int, int>> cut{{u, v}, {u, w}, {v, w}};
        std::vector<int> zone(all_faces.size(), -1);
        int nz = 0;
        for (size_t s = 0; s < all_faces.size(); ++s) {
          if (zone[s] != -1) continue;
          std::vector<int> stack{static_cast<int>(s)};
          zone[s] = nz;
          while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            const auto& walk = all_faces[f];
            for (size_t i = 0; i < walk.size(); ++i) {
              int a = walk[i], b = walk[(i + 1) % walk.size()];
              std::pair<int, int> e{std::min(a, b), std::max(a, b)};
              if (cut.count(e)) continue;
              for (int f2 : edge_faces[e])
                if (zone[f2] == -1) {
                  zone[f2] = nz;
                  stack.push_back(f2);
                }
            }
          }
          ++nz;
        }
        if (nz != 2) continue;  // triangle spanning components; not a closed curve
        std::array<std::set<int>, 2> verts;
        for (size_t f = 0; f < all_faces.size(); ++f)
          for (int x : all_faces[f])
            if (x != u && x != v && x != w) verts[zone[f]].insert(x);
        // A face triangle leaves one side empty; only triangles with
        // vertices strictly on both sides separate the graph.
        if (verts[0].empty() || verts[1].empty()) continue;
        int inner;
        if (outer_face_idx >= 0)
          inner = 1 - zone[outer_face_idx];
        else if (verts[0].size() != verts[1].size())
          inner = verts[0].size() < verts[1].size() ? 0 : 1;
        else
          inner = std::lexicographical_compare(verts[0].begin(), verts[0].end(),
                                               verts[1].begin(), verts[1].end())
                      ? 0
                      : 1;
        SeparatingTriangle st;
        st.tri = {u, v, w};
        st.interior.assign(verts[inner].begin(), verts[inner].end());
        out.push_back(std::move(st));
      }
    }
  std::sort(out.begin(), out.end(), [](const SeparatingTriangle& a, const SeparatingTriangle& b) {
    if (a.interior.size() != b.interior.size()) return a.interior.size() < b.interior.size();
    return a.tri < b.tri;
  });
  return out;
}

PlaneGraph parse_plane_graph(const std::string& text) {
  std::vector<std::string> lines;
  for (const auto& raw : split_lines(text)) {
    auto s = strip_comment(raw);
    if (!s.empty()) lines.push_back(s);
  }
  if (lines.empty()) throw ParseError("graph file: empty");
  int n;
  if (!parse_int(lines[0], n) || n < 0) throw ParseError("graph file: bad vertex count line");
  PlaneGraph g;
  g.n = n;
  g.rot.resize(n);
  size_t li = 1;
  std::vector<char> seen(n, 0);
  for (int row = 0; row < n; ++row, ++li) {
    if (li >= lines.size()) throw ParseError("graph file: missing adjacency lines");
    const std::string& s = lines[li];
    auto colon = s.find(':');
    if (colon == std::string::npos) throw ParseError("graph file: missing ':' in line '" + s + "'");
    int v;
    if (!parse_int(strip_comment(s.substr(0, colon)), v) || v < 0 || v >= n)
      throw ParseError("graph file: bad vertex id in line '" + s + "'");
    if (seen[v]) throw ParseError("graph file: duplicate row for vertex " + std::to_string(v));
    seen[v] = 1;
    for (const auto& tok : split_ws(s.substr(colon + 1))) {
      int w;
      if (!parse_int(tok, w)) throw ParseError("graph file: bad neighbor token '" + tok + "'");
      g.rot[v].push_back(w);
    }
  }
  if (li < lines.size()) {
    auto toks = split_ws(lines[li]);
    if (toks.size() == 4 && toks[0] == "outer:") {
      std::array<int, 3> t;
      for (int i = 0; i < 3; ++i)
        if (!parse_int(toks[i + 1], t[i])) throw ParseError("graph file: bad outer face line");
      g.outer = t;
      ++li;
    }
  }
  if (li < lines.size()) throw ParseError("graph file: unexpected trailing line '" + lines[li] + "'");
  validate(g);
  return g;
}

std::string format_plane_graph(const PlaneGraph& g) {
  std::ostringstream out;
  out << g.n << "\n";
  for (int v = 0; v < g.n; ++v) {
    out << v << ":";
    for (int w : g.rot[v]) out << " " << w;
    out << "\n";
  }
  if (g.outer)
    out << "outer: " << (*g.outer)[0] << " " << (*g.outer)[1] << " " << (*g.outer)[2] << "\n";
  return out.str();
}

}  // namespace rcp
