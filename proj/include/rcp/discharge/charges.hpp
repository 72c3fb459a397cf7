#pragma once

#include <array>
#include <string>
#include <vector>

#include "rcp/embed/plane_graph.hpp"

namespace rcp {

// Big: degree at least 7 or on the outer face; medium: inner degree 6;
// small: inner degree 5. Inner vertices of degree below five fall in no
// class (None) and are inert under every redistribution rule.
enum class VertexClass { Big, Medium, Small, None };

std::string vertex_class_token(VertexClass c);
std::vector<VertexClass> classify_vertices(const PlaneGraph& g);

// One unit of charge with its full routing: the face it leaves the source
// through, the face it passes through next to the sink, and the edge along
// which it arrives.  Faces are stored as sorted triples, the arrival edge
// as (other endpoint, sink).
struct ChargeTransfer {
  std::string rule;  // "R1", "R2", "R3"
  int source = -1;
  int sink = -1;
  int amount = 1;  // always one unit; a 2-unit rule shows up as two rows
  std::array<int, 3> leave_face{-1, -1, -1};
  std::array<int, 3> pass_face{-1, -1, -1};
  std::array<int, 2> arrive_edge{-1, -1};
};

struct ChargeLedger {
  std::vector<VertexClass> classes;
  std::vector<int> initial;
  std::vector<ChargeTransfer> transfers;
  std::vector<int> final_charge;  // initial - outgoing + incoming
};

// 10 * deg(v) - 60 for every vertex; sums to -120 on a triangulation.
std::vector<int> initial_charges(const PlaneGraph& g);

// The three redistribution rules:
//   R1: a big vertex sends 2 units to each adjacent small vertex along
//       their common edge, one unit leaving through each incident face;
//   R2: for a face v-u-x with v big, u small, x small or medium, v sends a
//       unit that leaves and passes through that face and arrives along xu;
//   R3: around a medium vertex x, a run of consecutive neighbors
//       v_1, ..., v_m (3 <= m <= 6, either rotation direction) with v_1
//       small, the middle vertices medium and v_m big sends a unit from
//       v_m to v_1, leaving through face x-v_{m-1}-v_m, passing through
//       face x-v_1-v_2, arriving along v_2-v_1.
// Requires a triangulation with the outer face set.
ChargeLedger apply_rules(const PlaneGraph& g);

struct FinalChargeReport {
  std::vector<int> final_charge;
  long long total = 0;       // always -120 when conserved
  bool conserved = false;    // per-vertex bookkeeping and the -120 total
  bool mediums_zero = false; // rules never touch a medium vertex
  // Incoming units per inner small vertex; 10 exactly when no catalog
  // configuration appears (reported, not asserted).
  std::vector<std::pair<int, int>> small_incoming;
};

FinalChargeReport final_charges(const PlaneGraph& g, const ChargeLedger& ledger);

// Outflow t(f) for every face around an inner vertex of degree >= 7,
// aligned with the wheel: entry i covers the face v-rim[i]-rim[i+1].
// Computed from the ledger's leave_face routing.
std::vector<int> face_outflow(const PlaneGraph& g, const ChargeLedger& ledger, int v);

}  // namespace rcp
