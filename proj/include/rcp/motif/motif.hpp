#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rcp {

struct MotifError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// All nine usable target colors as a list bitmask (bit c-1 = color c).
inline constexpr uint16_t kFullList = 0x1FF;

// A vertex-labelled graph with a current coloring and per-vertex lists of
// allowed replacement colors. Colors run over 1..10; lists are subsets of
// {1..9} stored as bitmasks (bit c-1 for color c).
struct Motif {
  int n = 0;
  std::vector<uint32_t> adj;    // adjacency bitmask per vertex
  std::vector<int> alpha;      // current color, 1..10
  std::vector<uint16_t> lists;  // allowed target colors

  bool has_edge(int u, int v) const { return adj[u] >> v & 1; }
  int deg(int v) const { return __builtin_popcount(adj[v]); }
  // Number of neighbors whose current color differs from 10.
  int degp(int v) const {
    int d = 0;
    for (int u = 0; u < n; ++u)
      if (has_edge(v, u) && alpha[u] != 10) ++d;
    return d;
  }
  int list_size(int v) const { return __builtin_popcount(lists[v]); }
  bool in_list(int v, int c) const { return c >= 1 && c <= 9 && (lists[v] >> (c - 1) & 1); }

  void add_edge(int u, int v) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  bool operator==(const Motif&) const = default;
};

Motif make_motif(int n, const std::vector<std::pair<int, int>>& edges,
                 const std::vector<int>& alpha, const std::vector<std::vector<int>>& lists);

// Empty string when the motif satisfies all invariants: alpha proper and
// in range, lists within {1..9}, adjacency symmetric and loop-free.
std::string motif_invariant_error(const Motif& m);

// Removes vertex v; vertices above v shift down by one. Lists and colors
// of the remaining vertices are untouched.
Motif remove_vertex(const Motif& m, int v);

// Relabel colors by a permutation of {1..9} (fixing 10), applied to both
// alpha and the lists. perm[c] is the image of color c, perm[10] == 10.
Motif apply_color_permutation(const Motif& m, const std::vector<int>& perm);

// Description vectors: per-position either a required list size or a
// wildcard; bracket groups assert that some vertex in the index segment
// currently has color 10.
struct DescriptionVector {
  struct Entry {
    int size = 0;
    bool wildcard = false;
    bool operator==(const Entry&) const = default;
  };
  std::vector<Entry> entries;
  std::vector<std::pair<int, int>> bracket_groups;  // inclusive 0-based segments
  bool operator==(const DescriptionVector&) const = default;
};

// Accepts forms like "(2,1)", "(3,[3],5)", "(2,[3,5],1)", "(*,4,*)".
DescriptionVector parse_description(const std::string& text);
std::string format_description(const DescriptionVector& d);

bool describes(const Motif& m, const DescriptionVector& d);

// All motifs obtained from m by shrinking each list to exactly the
// required size (wildcards keep their lists).
std::vector<Motif> truncate_to(const Motif& m, const DescriptionVector& d);

// Text format: "vertices m" / "edges: a-b ..." / "alpha: ..." /
// "L i: c1 c2 ..." with 1-based vertex labels.
Motif parse_motif(const std::string& text);
std::string format_motif(const Motif& m);

}  // namespace rcp
