#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "rcp/embed/plane_graph.hpp"

namespace rcp {

struct ColoringError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Total assignment of colors 1..k to the vertices of a graph.
struct Coloring {
  int k = 10;
  std::vector<int> colors;

  bool operator==(const Coloring&) const = default;
};

// A graph together with a proper 10-coloring that may use the extra
// color 10; the solver removes all occurrences of 10.
struct Scene {
  PlaneGraph graph;
  Coloring alpha;
};

struct RecolorStep {
  int vertex = 0;
  int color = 0;

  bool operator==(const RecolorStep&) const = default;
};

using RecolorSequence = std::vector<RecolorStep>;

struct SequenceReport {
  bool valid = false;
  std::string error;  // empty when valid
  int error_step = -1;
  size_t length = 0;
  std::vector<int> recolor_counts;
  Coloring final;  // coloring after the longest legal prefix
};

bool is_proper(const PlaneGraph& g, const Coloring& phi);

// All single-vertex proper recolorings, ordered by vertex then color.
std::vector<RecolorStep> reconfig_moves(const PlaneGraph& g, const Coloring& phi);

// True iff phi has no reconfiguration moves; decided locally by checking
// that every closed neighborhood carries all k colors.
bool is_frozen(const PlaneGraph& g, const Coloring& phi);

// One-step legality: vertex and color in range, color differs from the
// current one, and properness holds afterwards. Empty string when legal.
std::string check_step(const PlaneGraph& g, const Coloring& phi, RecolorStep s);

// Full validity for scene solutions: start proper, every step legal, each
// vertex recolored at most once (to a color != 10) or exactly twice (first
// to 10, then to != 10), and the final coloring avoids color 10 entirely.
SequenceReport verify_valid_sequence(const Scene& scene, const RecolorSequence& seq);

// Generic path check in the reconfiguration graph: every step legal and
// the replay ends exactly at `to`. Empty string when the path is valid.
std::string check_recoloring_path(const PlaneGraph& g, const Coloring& from,
                                  const RecolorSequence& seq, const Coloring& to);

Coloring parse_coloring(const std::string& text);
std::string format_coloring(const Coloring& c);
RecolorSequence parse_sequence(const std::string& text);
std::string format_sequence(const RecolorSequence& seq);

// Random proper k-coloring: vertices are colored in reverse min-degree
// peeling order, each drawing uniformly among its free colors, so the draw
// always succeeds when k exceeds the graph's degeneracy. Throws
// ColoringError when some vertex ends up with no free color.
Coloring random_proper_coloring(const PlaneGraph& g, int k, uint64_t seed);

}  // namespace rcp
