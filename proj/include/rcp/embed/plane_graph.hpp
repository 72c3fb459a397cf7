#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rcp {

class GraphError : public std::runtime_error {
 public:
  explicit GraphError(const std::string& what) : std::runtime_error(what) {}
};

// A plane graph as a rotation system: rot[v] lists the neighbors of v in
// clockwise order around v. Face tracing follows the predecessor rule: the
// directed edge (u -> v) is succeeded by (v -> w) where w immediately
// precedes u in rot[v]. On a valid sphere embedding every connected
// component satisfies n - m + f = 2 for the faces traced this way.
struct PlaneGraph {
  int n = 0;
  std::vector<std::vector<int>> rot;
  // Optional distinguished outer face, stored as a directed triangle that
  // must coincide with a traced face walk up to cyclic rotation.
  std::optional<std::array<int, 3>> outer;

  int degree(int v) const { return static_cast<int>(rot[v].size()); }
  int edge_count() const;
  bool has_edge(int u, int v) const;
  // Index of u within rot[v]; -1 when absent.
  int rot_index(int v, int u) const;
};

// A face as its directed boundary walk (v0, v1, ..., v_{l-1}); edge i is
// (v_i -> v_{i+1 mod l}). Walks may repeat vertices at cut vertices.
using Face = std::vector<int>;

struct Wheel {
  int center = -1;
  std::vector<int> rim;  // rot[center], i.e. clockwise order
};

struct TriangulationReport {
  bool is_triangulation = false;
  bool connected = false;
  int min_degree = 0;
  std::vector<int> degrees;
  std::vector<std::string> issues;
};

struct SeparatingTriangle {
  std::array<int, 3> tri;      // sorted ascending
  std::vector<int> interior;   // interior vertex ids, sorted
};

struct VertexMapResult {
  PlaneGraph graph;
  // vertex_map[old_id] = new id (identified partner maps to the survivor).
  std::vector<int> vertex_map;
};

struct SubgraphResult {
  PlaneGraph graph;
  std::vector<int> old_ids;  // new id -> old id
};

// Structural validation: symmetric simple adjacency, per-component Euler
// formula under face tracing, and (when set) the outer triple being a
// traced triangular face. Throws GraphError with a description.
void validate(const PlaneGraph& g);

// All faces, traced deterministically (scan directed edges by source id,
// then by rotation position).
std::vector<Face> faces(const PlaneGraph& g);

TriangulationReport validate_triangulation(const PlaneGraph& g);

Wheel wheel_of(const PlaneGraph& g, int center);

// True when every pair of cyclically consecutive rim vertices is adjacent
// in g (always holds for wheels of a triangulation).
bool wheel_rim_closed(const PlaneGraph& g, const Wheel& w);

// All separating triangles with their interior vertex sets, innermost
// (smallest interior) first; ties broken by the sorted triple. "Interior"
// is the side avoiding the outer face; without an outer designation the
// smaller side counts as interior (ties by vertex list).
std::vector<SeparatingTriangle> separating_triangles(const PlaneGraph& g);

// Inserts the chord u-v inside the given face (u, v incident with it,
// distinct, non-adjacent). The first occurrences of u and v on the walk
// select the corners.
PlaneGraph surgery_add_edge(const PlaneGraph& g, const Face& face, int u, int v);

// Identifies u and v across the given face (same preconditions); parallel
// edges arising from common neighbors are collapsed. The survivor keeps
// u's id; all ids are compacted.
VertexMapResult surgery_identify(const PlaneGraph& g, const Face& face, int u, int v);

// Induced subgraph on the given (sorted, deduplicated) vertex set;
// rotations are filtered in place, which preserves the embedding.
SubgraphResult induced_subgraph(const PlaneGraph& g, const std::vector<int>& keep);

// Removes an existing edge, merging its two incident faces.
PlaneGraph delete_edge(const PlaneGraph& g, int u, int v);

// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<int>> components(const PlaneGraph& g);

// File format: '#' comments; first token line "n"; then n lines
// "i: c1 c2 ... cd" (clockwise); optionally "outer: a b c".
PlaneGraph parse_plane_graph(const std::string& text);
std::string format_plane_graph(const PlaneGraph& g);

}  // namespace rcp
