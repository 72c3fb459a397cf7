#include "rcp/discharge/charges.hpp"

#include <algorithm>
#include <map>

namespace rcp {
namespace {

std::array<int, 3> sorted_face(int a, int b, int c) {
  std::array<int, 3> f{a, b, c};
  std::sort(f.begin(), f.end());
  return f;
}

// The two faces incident with each edge, keyed by the sorted endpoint pair.
std::map<std::pair<int, int>, std::vector<std::array<int, 3>>> edge_faces(
    const std::vector<Face>& all) {
  std::map<std::pair<int, int>, std::vector<std::array<int, 3>>> out;
  for (const auto& f : all) {
    if (f.size() != 3) throw GraphError("charge rules need triangular faces");
    auto tri = sorted_face(f[0], f[1], f[2]);
    for (int i = 0; i < 3; ++i) {
      int a = f[i], b = f[(i + 1) % 3];
      out[{std::min(a, b), std::max(a, b)}].push_back(tri);
    }
  }
  return out;
}

}  // namespace

std::string vertex_class_token(VertexClass c) {
  switch (c) {
    case VertexClass::Big: return "big";
    case VertexClass::Medium: return "medium";
    case VertexClass::Small: return "small";
    default: return "none";
  }
}

std::vector<VertexClass> classify_vertices(const PlaneGraph& g) {
  if (!g.outer) throw GraphError("vertex classes need the outer face set");
  std::vector<VertexClass> cls(g.n, VertexClass::Big);
  for (int v = 0; v < g.n; ++v) {
    bool outer = std::find(g.outer->begin(), g.outer->end(), v) != g.outer->end();
    if (outer || g.degree(v) >= 7)
      cls[v] = VertexClass::Big;
    else if (g.degree(v) == 6)
      cls[v] = VertexClass::Medium;
    else if (g.degree(v) == 5)
      cls[v] = VertexClass::Small;
    else
      cls[v] = VertexClass::None;
  }
  return cls;
}

std::vector<int> initial_charges(const PlaneGraph& g) {
  std::vector<int> ch(g.n);
  for (int v = 0; v < g.n; ++v) ch[v] = 10 * g.degree(v) - 60;
  return ch;
}

ChargeLedger apply_rules(const PlaneGraph& g) {
  auto report = validate_triangulation(g);
  if (!report.is_triangulation)
    throw GraphError("charge rules need a triangulation");
  ChargeLedger ledger;
  ledger.classes = classify_vertices(g);
  ledger.initial = initial_charges(g);
  auto all = faces(g);
  auto by_edge = edge_faces(all);
  auto cls = [&](int v) { return ledger.classes[v]; };

  // R1: big -> adjacent small, one unit through each face of the edge.
  for (int v = 0; v < g.n; ++v) {
    if (cls(v) != VertexClass::Big) continue;
    for (int u : g.rot[v]) {
      if (cls(u) != VertexClass::Small) continue;
      const auto& fs = by_edge.at({std::min(u, v), std::max(u, v)});
      if (fs.size() != 2) throw GraphError("edge not on exactly two faces");
      for (const auto& f : fs)
        ledger.transfers.push_back({"R1", v, u, 1, f, f, {v, u}});
    }
  }

  // R2: face v-u-x, v big, u small, x small or medium; arrives along xu.
  for (const auto& f : all) {
    auto tri = sorted_face(f[0], f[1], f[2]);
    for (int iu = 0; iu < 3; ++iu)
      for (int iv = 0; iv < 3; ++iv) {
        if (iv == iu) continue;
        int u = tri[iu], v = tri[iv], x = tri[3 - iu - iv];
        if (cls(v) != VertexClass::Big || cls(u) != VertexClass::Small) continue;
        if (cls(x) != VertexClass::Small && cls(x) != VertexClass::Medium) continue;
        ledger.transfers.push_back({"R2", v, u, 1, tri, tri, {x, u}});
      }
  }

  // R3: around each medium x, in both rotation directions, a small vertex
  // followed by mediums and then a big vertex within six steps.
  for (int x = 0; x < g.n; ++x) {
    if (cls(x) != VertexClass::Medium) continue;
    const auto& rim = g.rot[x];
    int d = static_cast<int>(rim.size());
    for (int dir : {+1, -1}) {
      for (int i = 0; i < d; ++i) {
        if (cls(rim[i]) != VertexClass::Small) continue;
        int prev = rim[i];
        for (int step = 1; step <= 5; ++step) {
          int w = rim[((i + dir * step) % d + d) % d];
          if (cls(w) == VertexClass::Medium) {
            prev = w;
            continue;
          }
          if (cls(w) == VertexClass::Big && step >= 2) {
            int v2 = rim[((i + dir) % d + d) % d];
            ledger.transfers.push_back({"R3", w, rim[i], 1,
                                        sorted_face(x, prev, w),
                                        sorted_face(x, rim[i], v2),
                                        {v2, rim[i]}});
          }
          break;
        }
      }
    }
  }

  ledger.final_charge = ledger.initial;
  for (const auto& tr : ledger.transfers) {
    ledger.final_charge[tr.source] -= tr.amount;
    ledger.final_charge[tr.sink] += tr.amount;
  }
  return ledger;
}

FinalChargeReport final_charges(const PlaneGraph& g, const ChargeLedger& ledger) {
  FinalChargeReport rep;
  rep.final_charge = ledger.initial;
  for (const auto& tr : ledger.transfers) {
    rep.final_charge[tr.source] -= tr.amount;
    rep.final_charge[tr.sink] += tr.amount;
  }
  rep.total = 0;
  long long total_initial = 0;
  for (int v = 0; v < g.n; ++v) {
    rep.total += rep.final_charge[v];
    total_initial += ledger.initial[v];
  }
  rep.conserved = rep.total == total_initial && rep.total == -120 &&
                  rep.final_charge == ledger.final_charge;
  rep.mediums_zero = true;
  for (int v = 0; v < g.n; ++v)
    if (ledger.classes[v] == VertexClass::Medium && rep.final_charge[v] != 0)
      rep.mediums_zero = false;
  for (int v = 0; v < g.n; ++v) {
    if (ledger.classes[v] != VertexClass::Small) continue;
    int in = 0;
    for (const auto& tr : ledger.transfers)
      if (tr.sink == v) in += tr.amount;
    rep.small_incoming.push_back({v, in});
  }
  return rep;
}

std::vector<int> face_outflow(const PlaneGraph& g, const ChargeLedger& ledger, int v) {
  if (!g.outer) throw GraphError("face outflow needs the outer face set");
  bool outer = std::find(g.outer->begin(), g.outer->end(), v) != g.outer->end();
  if (outer || g.degree(v) < 7)
    throw GraphError("face outflow is defined for inner vertices of degree >= 7");
  const auto& rim = g.rot[v];
  int d = static_cast<int>(rim.size());
  std::vector<int> t(d, 0);
  std::map<std::array<int, 3>, int> slot;
  for (int i = 0; i < d; ++i) {
    std::array<int, 3> f{v, rim[i], rim[(i + 1) % d]};
    std::sort(f.begin(), f.end());
    slot[f] = i;
  }
  for (const auto& tr : ledger.transfers) {
    if (tr.source != v) continue;
    auto it = slot.find(tr.leave_face);
    if (it == slot.end()) throw GraphError("ledger leave face not around vertex");
    t[it->second] += tr.amount;
  }
  return t;
}

}  // namespace rcp
