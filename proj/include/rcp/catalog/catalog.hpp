#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rcp/motif/motif.hpp"

namespace rcp {

struct CatalogError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Degree marks: exact five, at most six, at most seven.
enum class Mark { Eq5, Le6, Le7 };

int mark_bound(Mark m);
std::string mark_token(Mark m);
bool parse_mark(const std::string& tok, Mark& out);

// Structural hypothesis flags. Vertex ids are 0-based and stored in the
// canonical order produced by derive_hypotheses:
//   Nbhd10           {}            10 in every closed neighborhood
//   Sat10            {v}           pattern degree == mark bound at v
//   Pair55           {a,b}, a<b    edge with both endpoints eq5
//   Tri56            {a,b,c}, b<c  triangle, a eq5, b and c at most le6
//   Fan10            {m1,e1,m2,e2} induced K4 minus e1-e2, m1<m2, e1<e2,
//                                  some end eq5, other end and some
//                                  middle at most le6
struct Hypothesis {
  enum class Kind { Nbhd10, Sat10, Pair55, Tri56, Fan10 };
  Kind kind = Kind::Nbhd10;
  std::vector<int> verts;

  bool operator==(const Hypothesis&) const = default;
  bool operator<(const Hypothesis& o) const {
    if (kind != o.kind) return kind < o.kind;
    return verts < o.verts;
  }
};

std::string format_hypothesis(const Hypothesis& h);

struct ConfigurationTemplate {
  std::string id;
  int n = 0;
  std::vector<Mark> marks;
  std::vector<std::pair<int, int>> edges;  // a < b, sorted
  std::vector<Hypothesis> hypotheses;
  std::vector<DescriptionVector> vectors;
  std::vector<std::string> vector_text;  // as quoted in the data file

  bool has_edge(int a, int b) const;
  int pattern_deg(int v) const;
  std::vector<uint32_t> adjacency_masks() const;
  bool has_flag(Hypothesis::Kind k) const;
};

struct Catalog {
  std::vector<ConfigurationTemplate> templates;
  const ConfigurationTemplate& by_id(const std::string& id) const;
};

// Parses and validates: size-vector consistency (every integer entry is
// reachable as 9 - 2*(d - deg_pattern) + bonus for an admissible host
// degree d), and the hypothesis list must equal the structurally derived
// set. Violations are hard errors naming the offending piece.
Catalog load_catalog(const std::string& text);

// The catalog compiled in from data/catalog.cfg.
const Catalog& default_catalog();
std::string default_catalog_text();

// Re-derives the hypothesis flags from marks + edges, in canonical order.
std::vector<Hypothesis> derive_hypotheses(const ConfigurationTemplate& t);

// True when alpha is a proper {1..10} coloring of the template satisfying
// every hypothesis flag.
bool alpha_satisfies(const ConfigurationTemplate& t, const std::vector<int>& alpha);

// Smallest list size the marks force at v under alpha: 9 - 2*(bound -
// pattern degree), plus one when the closed pattern neighborhood of v
// misses color 10 (the ambient neighborhood rule then supplies a
// color-10 neighbor outside, which costs one removal instead of two).
int min_list_size(const ConfigurationTemplate& t, int v, const std::vector<int>& alpha);

std::vector<int> min_list_sizes(const ConfigurationTemplate& t, const std::vector<int>& alpha);

}  // namespace rcp
