#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "rcp/embed/plane_graph.hpp"

namespace rcp::testing {

// Cycle on n vertices embedded with two faces.
inline PlaneGraph make_cycle(int n) {
  PlaneGraph g;
  g.n = n;
  g.rot.resize(n);
  for (int i = 0; i < n; ++i) {
    g.rot[i].push_back((i + 1) % n);
    g.rot[i].push_back((i + n - 1) % n);
  }
  return g;
}

// Path v0 - v1 - ... - v_{n-1}.
inline PlaneGraph make_path(int n) {
  PlaneGraph g;
  g.n = n;
  g.rot.resize(n);
  for (int i = 0; i + 1 < n; ++i) {
    g.rot[i].push_back(i + 1);
    g.rot[i + 1].push_back(i);
  }
  return g;
}

inline PlaneGraph make_edgeless(int n) {
  PlaneGraph g;
  g.n = n;
  g.rot.resize(n);
  return g;
}

// Splits the triangular face (x -> y -> z) with a new vertex adjacent to
// all three corners. The face must be a traced face of g.
inline PlaneGraph subdivide_face(const PlaneGraph& g, const Face& face) {
  if (face.size() != 3) throw GraphError("subdivision needs a triangle");
  PlaneGraph h = g;
  int w = h.n++;
  h.rot.emplace_back();
  // At each corner the new vertex slots between the corner's two face
  // neighbors: after the face-successor, before the face-predecessor.
  for (int i = 0; i < 3; ++i) {
    int x = face[i], y = face[(i + 1) % 3], z = face[(i + 2) % 3];
    int pos = h.rot_index(x, y);
    if (pos < 0 || h.rot_index(x, z) < 0) throw GraphError("not a face of the graph");
    h.rot[x].insert(h.rot[x].begin() + pos + 1, w);
    h.rot[w].push_back(x);
  }
  validate(h);
  return h;
}

inline bool has_face_of_length(const PlaneGraph& g, size_t len) {
  for (const auto& f : faces(g))
    if (f.size() == len) return true;
  return false;
}

inline std::vector<size_t> face_lengths(const PlaneGraph& g) {
  std::vector<size_t> out;
  for (const auto& f : faces(g)) out.push_back(f.size());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace rcp::testing
