#include "rcp/embed/generate.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "rcp/util/rng.hpp"

namespace rcp {

namespace {

PlaneGraph make_k4() {
  PlaneGraph g;
  g.n = 4;
  g.rot = {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};
  g.outer = std::array<int, 3>{0, 1, 2};
  validate(g);
  return g;
}

PlaneGraph make_octahedron() {
  PlaneGraph g;
  g.n = 6;
  g.rot = {{1, 2, 3, 4}, {0, 4, 5, 2}, {0, 1, 5, 3}, {0, 2, 5, 4}, {0, 3, 5, 1}, {4, 3, 2, 1}};
  g.outer = std::array<int, 3>{0, 1, 2};
  validate(g);
  return g;
}

// Icosahedron from the (0, ±1, ±phi) coordinate family. Vertices are the
// twelve coordinate triples in ascending lexicographic order, so vertex i
// and vertex 11 - i are antipodal. Rotations are obtained by angular
// sorting around the outward normal with a fixed handedness.
PlaneGraph make_icosahedron() {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<std::array<double, 3>> pts;
  for (double s1 : {-1.0, 1.0})
    for (double s2 : {-1.0, 1.0}) {
      pts.push_back({0.0, s1, s2 * phi});
      pts.push_back({s1, s2 * phi, 0.0});
      pts.push_back({s1 * phi, 0.0, s2});
    }
  std::sort(pts.begin(), pts.end());

  PlaneGraph g;
  g.n = 12;
  g.rot.resize(12);
  auto sub = [](const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return std::array<double, 3>{a[0] - b[0], a[1] - b[1], a[2] - b[2]};
  };
  auto dot = [](const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
  };
  auto cross = [](const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return std::array<double, 3>{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                                 a[0] * b[1] - a[1] * b[0]};
  };
  auto scale = [](const std::array<double, 3>& a, double t) {
    return std::array<double, 3>{a[0] * t, a[1] * t, a[2] * t};
  };
  for (int v = 0; v < 12; ++v) {
    std::vector<int> nbrs;
    for (int w = 0; w < 12; ++w) {
      if (w == v) continue;
      auto d = sub(pts[v], pts[w]);
      if (std::abs(dot(d, d) - 4.0) < 1e-9) nbrs.push_back(w);
    }
    auto nrm = scale(pts[v], 1.0 / std::sqrt(dot(pts[v], pts[v])));
    std::array<double, 3> ref{0.12803, 0.45677, 0.78961};
    auto e1 = cross(nrm, ref);
    e1 = scale(e1, 1.0 / std::sqrt(dot(e1, e1)));
    auto e2 = cross(nrm, e1);
    std::vector<std::pair<double, int>> ang;
    for (int w : nbrs) {
      auto d = sub(pts[w], pts[v]);
      ang.push_back({std::atan2(dot(d, e2), dot(d, e1)), w});
    }
    std::sort(ang.begin(), ang.end());
    for (auto& [a, w] : ang) g.rot[v].push_back(w);
  }
  auto f0 = faces(g)[0];
  g.outer = std::array<int, 3>{f0[0], f0[1], f0[2]};
  validate(g);
  return g;
}

// Inserts a new vertex into the triangular face walk (a, b, c), joined to
// all three corners.
void insert_vertex_in_face(PlaneGraph& g, const Face& f) {
  int z = g.n++;
  g.rot.push_back({f[0], f[1], f[2]});
  for (int i = 0; i < 3; ++i) {
    int corner = f[i], pred = f[(i + 2) % 3];
    auto& r = g.rot[corner];
    r.insert(r.begin() + g.rot_index(corner, pred), z);
  }
}

struct FlipInfo {
  int x = -1, y = -1;  // apexes of the two faces on the edge
  bool ok = false;
};

FlipInfo flip_apexes(const PlaneGraph& g, int u, int v) {
  FlipInfo fi;
  int du = g.degree(u), dv = g.degree(v);
  fi.x = g.rot[v][(g.rot_index(v, u) - 1 + dv) % dv];
  fi.y = g.rot[u][(g.rot_index(u, v) - 1 + du) % du];
  fi.ok = fi.x != fi.y && !g.has_edge(fi.x, fi.y);
  return fi;
}

void apply_flip(PlaneGraph& g, int u, int v, const FlipInfo& fi) {
  auto& ru = g.rot[u];
  auto& rv = g.rot[v];
  ru.erase(ru.begin() + g.rot_index(u, v));
  rv.erase(rv.begin() + g.rot_index(v, u));
  auto& rx = g.rot[fi.x];
  rx.insert(rx.begin() + g.rot_index(fi.x, v), fi.y);
  auto& ry = g.rot[fi.y];
  ry.insert(ry.begin() + g.rot_index(fi.y, u), fi.x);
}

bool is_outer_edge(const PlaneGraph& g, int u, int v) {
  if (!g.outer) return false;
  const auto& t = *g.outer;
  for (int i = 0; i < 3; ++i) {
    int a = t[i], b = t[(i + 1) % 3];
    if ((a == u && b == v) || (a == v && b == u)) return true;
  }
  return false;
}

std::vector<std::pair<int, int>> edge_list(const PlaneGraph& g) {
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < g.n; ++u)
    for (int v : g.rot[u])
      if (u < v) es.push_back({u, v});
  return es;
}

}  // namespace

PlaneGraph generate_named(const std::string& name) {
  if (name == "k4") return make_k4();
  if (name == "octahedron") return make_octahedron();
  if (name == "icosahedron") return make_icosahedron();
  throw GraphError("unknown named graph: " + name);
}

PlaneGraph generate_random_triangulation(int n, uint64_t seed, long flips) {
  if (n < 4) throw GraphError("random triangulation needs n >= 4");
  Rng rng(mix_seed(seed, 0x72616e64));
  PlaneGraph g = make_k4();
  while (g.n < n) {
    auto fs = faces(g);
    std::vector<Face> inner;
    for (auto& f : fs) {
      bool outer = g.outer && f.size() == 3;
      if (outer) {
        std::array<int, 3> t{f[0], f[1], f[2]};
        std::sort(t.begin(), t.end());
        std::array<int, 3> o = *g.outer;
        std::sort(o.begin(), o.end());
        outer = t == o;
      }
      if (!outer) inner.push_back(f);
    }
    insert_vertex_in_face(g, inner[rng.below(inner.size())]);
  }
  long budget = flips < 0 ? 4L * g.edge_count() : flips;
  for (long i = 0; i < budget; ++i) {
    auto es = edge_list(g);
    auto [u, v] = es[rng.below(es.size())];
    if (is_outer_edge(g, u, v) || g.degree(u) <= 3 || g.degree(v) <= 3) continue;
    auto fi = flip_apexes(g, u, v);
    if (!fi.ok) continue;
    apply_flip(g, u, v, fi);
  }
  validate(g);
  return g;
}

PlaneGraph generate_random_mindeg5(int n, uint64_t seed) {
  if (n < 12) throw GraphError("minimum-degree-5 triangulation needs n >= 12");
  Rng rng(mix_seed(seed, 0x6d696e35));
  PlaneGraph g = make_icosahedron();

  auto is_outer_vertex = [&](int v) {
    const auto& t = *g.outer;
    return v == t[0] || v == t[1] || v == t[2];
  };
  // Lower degree bound a vertex must keep: inner vertices 5, outer 3.
  auto floor_of = [&](int v) { return is_outer_vertex(v) ? 3 : 5; };

  long budget = 500 + 400L * (n - 12);
  auto charge = [&]() {
    if (--budget < 0) throw GraphError("generator budget exhausted (mindeg5, seed dead end)");
  };

  while (g.n < n) {
    charge();
    // Candidate insertion: face (a,b,c) plus two of its boundary edges to
    // flip toward the new vertex; the shared corner loses one degree net.
    auto fs = faces(g);
    std::vector<Face> inner;
    for (auto& f : fs) {
      std::array<int, 3> t{f[0], f[1], f[2]};
      std::sort(t.begin(), t.end());
      std::array<int, 3> o = *g.outer;
      std::sort(o.begin(), o.end());
      if (t != o) inner.push_back(f);
    }
    // Seeded scan order over faces.
    size_t start = rng.below(inner.size());
    bool inserted = false;
    for (size_t k = 0; k < inner.size() && !inserted; ++k) {
      const Face& f = inner[(start + k) % inner.size()];
      // Shared corner s = f[i]; flip the two edges incident to s.
      size_t i0 = rng.below(3);
      for (size_t ii = 0; ii < 3 && !inserted; ++ii) {
        int i = static_cast<int>((i0 + ii) % 3);
        int s = f[i], p = f[(i + 1) % 3], q = f[(i + 2) % 3];
        if (g.degree(s) - 1 < floor_of(s)) continue;
        if (is_outer_edge(g, s, p) || is_outer_edge(g, s, q)) continue;
        PlaneGraph h = g;
        insert_vertex_in_face(h, f);
        int z = h.n - 1;
        auto f1 = flip_apexes(h, s, p);
        if (!f1.ok) continue;
        apply_flip(h, s, p, f1);
        auto f2 = flip_apexes(h, s, q);
        if (!f2.ok) continue;
        apply_flip(h, s, q, f2);
        if (h.degree(z) != 5) continue;
        g = std::move(h);
        inserted = true;
      }
    }
    if (!inserted) {
      // Shake: one random flip preserving all degree floors.
      auto es = edge_list(g);
      for (int t = 0; t < 40; ++t) {
        charge();
        auto [u, v] = es[rng.below(es.size())];
        if (is_outer_edge(g, u, v)) continue;
        if (g.degree(u) - 1 < floor_of(u) || g.degree(v) - 1 < floor_of(v)) continue;
        auto fi = flip_apexes(g, u, v);
        if (!fi.ok) continue;
        apply_flip(g, u, v, fi);
        break;
      }
    }
  }
  // Variety pass: seeded flips that keep the degree floors.
  long extra = 2L * g.edge_count();
  for (long i = 0; i < extra; ++i) {
    auto es = edge_list(g);
    auto [u, v] = es[rng.below(es.size())];
    if (is_outer_edge(g, u, v)) continue;
    if (g.degree(u) - 1 < floor_of(u) || g.degree(v) - 1 < floor_of(v)) continue;
    auto fi = flip_apexes(g, u, v);
    if (!fi.ok) continue;
    apply_flip(g, u, v, fi);
  }
  validate(g);
  auto rep = validate_triangulation(g);
  if (!rep.is_triangulation) throw GraphError("mindeg5 generator produced a non-triangulation");
  for (int v = 0; v < g.n; ++v)
    if (!is_outer_vertex(v) && g.degree(v) < 5)
      throw GraphError("mindeg5 generator left an inner vertex of degree < 5");
  return g;
}

}  // namespace rcp
