#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rcp/catalog/catalog.hpp"
#include "rcp/embed/plane_graph.hpp"

namespace rcp {

// A catalog template realized inside a wheel: injection[i] is the graph
// vertex playing template vertex i.  The template is an induced subgraph of
// the wheel (not necessarily of the whole graph), every image vertex obeys
// its degree mark in the ambient graph, and no image lies on the outer
// triangle.
struct Appearance {
  std::string config;
  int center = -1;
  std::vector<int> rim;
  std::vector<int> injection;
};

// First appearance in deterministic order: wheel centers ascending, then
// catalog templates in file order, then image tuples lexicographically.
// Requires a triangulation with outer face set, n >= 4, and every inner
// vertex of degree at least five.
std::optional<Appearance> find_appearance(const PlaneGraph& g, const Catalog& cat);

struct InducedAppearance {
  Appearance appearance;               // in ambient vertex ids
  bool used_separating_triangle = false;
  std::array<int, 3> disk_triangle{-1, -1, -1};  // bounding triangle searched
  std::vector<int> disk_vertices;      // vertices of the searched subgraph
};

// Corollary-grade strengthening: searching inside the innermost separating
// triangle's closed disk (or the whole graph when none exists) yields an
// appearance whose wheel is induced, so the template is induced in g with
// ambient degrees.  Requires minimum degree five; failure to find one is a
// hard error because the discharging argument guarantees existence.
InducedAppearance find_induced_configuration(const PlaneGraph& g, const Catalog& cat);

}  // namespace rcp
