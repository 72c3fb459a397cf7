#include "rcp/recolor/coloring.hpp"

#include <sstream>

#include "rcp/util/rng.hpp"
#include "rcp/util/text.hpp"

namespace rcp {

namespace {

void check_ranges(const PlaneGraph& g, const Coloring& phi) {
  if (static_cast<int>(phi.colors.size()) != g.n)
    throw ColoringError("coloring has " + std::to_string(phi.colors.size()) +
                        " entries for a graph on " + std::to_string(g.n) + " vertices");
  for (int v = 0; v < g.n; ++v)
    if (phi.colors[v] < 1 || phi.colors[v] > phi.k)
      throw ColoringError("color out of range at vertex " + std::to_string(v));
}

}  // namespace

bool is_proper(const PlaneGraph& g, const Coloring& phi) {
  check_ranges(g, phi);
  for (int u = 0; u < g.n; ++u)
    for (int v : g.rot[u])
      if (u < v && phi.colors[u] == phi.colors[v]) return false;
  return true;
}

std::vector<RecolorStep> reconfig_moves(const PlaneGraph& g, const Coloring& phi) {
  if (!is_proper(g, phi)) throw ColoringError("reconfig_moves on an improper coloring");
  std::vector<RecolorStep> out;
  for (int v = 0; v < g.n; ++v) {
    uint32_t seen = 0;
    for (int u : g.rot[v]) seen |= 1u << phi.colors[u];
    for (int c = 1; c <= phi.k; ++c)
      if (c != phi.colors[v] && !(seen >> c & 1)) out.push_back({v, c});
  }
  return out;
}

bool is_frozen(const PlaneGraph& g, const Coloring& phi) {
  if (!is_proper(g, phi)) throw ColoringError("is_frozen on an improper coloring");
  for (int v = 0; v < g.n; ++v) {
    uint32_t seen = 1u << phi.colors[v];
    for (int u : g.rot[v]) seen |= 1u << phi.colors[u];
    for (int c = 1; c <= phi.k; ++c)
      if (!(seen >> c & 1)) return false;
  }
  return true;
}

std::string check_step(const PlaneGraph& g, const Coloring& phi, RecolorStep s) {
  if (s.vertex < 0 || s.vertex >= g.n) return "step vertex out of range";
  if (s.color < 1 || s.color > phi.k) return "step color out of range";
  if (phi.colors[s.vertex] == s.color) return "step rewrites a vertex to its current color";
  for (int u : g.rot[s.vertex])
    if (phi.colors[u] == s.color) return "step makes edge to vertex " + std::to_string(u) + " monochromatic";
  return "";
}

SequenceReport verify_valid_sequence(const Scene& scene, const RecolorSequence& seq) {
  const PlaneGraph& g = scene.graph;
  SequenceReport rep;
  rep.length = seq.size();
  rep.recolor_counts.assign(g.n, 0);
  rep.final = scene.alpha;

  auto fail = [&](int step, const std::string& msg) {
    rep.valid = false;
    rep.error = msg;
    rep.error_step = step;
    return rep;
  };

  if (scene.alpha.k != 10) return fail(-1, "scene coloring must have k = 10");
  if (!is_proper(g, scene.alpha)) return fail(-1, "starting coloring is improper");

  for (size_t i = 0; i < seq.size(); ++i) {
    const RecolorStep& s = seq[i];
    std::string err = check_step(g, rep.final, s);
    if (!err.empty()) return fail(static_cast<int>(i), err);
    int cnt = ++rep.recolor_counts[s.vertex];
    if (cnt > 2)
      return fail(static_cast<int>(i), "pattern violation: vertex " + std::to_string(s.vertex) +
                                           " recolored a third time");
    if (cnt == 1 && s.color == 10) {
      // First recolor to 10 is only allowed when a second one follows;
      // checked at the end via the final-coloring condition.
    } else if (cnt == 2) {
      if (s.color == 10)
        return fail(static_cast<int>(i), "pattern violation: second recolor of vertex " +
                                             std::to_string(s.vertex) + " goes to color 10");
      if (rep.final.colors[s.vertex] != 10)
        return fail(static_cast<int>(i), "pattern violation: vertex " + std::to_string(s.vertex) +
                                             " recolored twice but not via color 10 first");
    }
    rep.final.colors[s.vertex] = s.color;
  }
  for (int v = 0; v < g.n; ++v)
    if (rep.final.colors[v] == 10)
      return fail(static_cast<int>(seq.size()), "final coloring uses color 10 at vertex " +
                                                    std::to_string(v));
  rep.valid = true;
  return rep;
}

std::string check_recoloring_path(const PlaneGraph& g, const Coloring& from,
                                  const RecolorSequence& seq, const Coloring& to) {
  if (!is_proper(g, from)) return "starting coloring is improper";
  Coloring cur = from;
  for (size_t i = 0; i < seq.size(); ++i) {
    std::string err = check_step(g, cur, seq[i]);
    if (!err.empty()) return "step " + std::to_string(i) + ": " + err;
    cur.colors[seq[i].vertex] = seq[i].color;
  }
  if (cur.colors != to.colors) return "sequence does not end at the target coloring";
  return "";
}

Coloring parse_coloring(const std::string& text) {
  std::vector<std::string> lines;
  for (const auto& raw : split_lines(text)) {
    auto s = strip_comment(raw);
    if (!s.empty()) lines.push_back(s);
  }
  if (lines.size() != 2) throw ParseError("coloring file: expected a k line and a colors line");
  Coloring c;
  if (!parse_int(lines[0], c.k) || c.k < 1) throw ParseError("coloring file: bad k line");
  auto toks = split_ws(lines[1]);
  if (toks.empty() || toks[0] != "colors:") throw ParseError("coloring file: missing 'colors:' line");
  for (size_t i = 1; i < toks.size(); ++i) {
    int v;
    if (!parse_int(toks[i], v)) throw ParseError("coloring file: bad color token '" + toks[i] + "'");
    c.colors.push_back(v);
  }
  return c;
}

std::string format_coloring(const Coloring& c) {
  std::ostringstream out;
  out << c.k << "\ncolors:";
  for (int x : c.colors) out << ' ' << x;
  out << '\n';
  return out.str();
}

RecolorSequence parse_sequence(const std::string& text) {
  RecolorSequence seq;
  for (const auto& raw : split_lines(text)) {
    auto s = strip_comment(raw);
    if (s.empty()) continue;
    auto toks = split_ws(s);
    int v, c;
    if (toks.size() != 4 || toks[0] != "recolor" || toks[2] != "->" || !parse_int(toks[1], v) ||
        !parse_int(toks[3], c))
      throw ParseError("sequence file: bad line '" + s + "'");
    seq.push_back({v, c});
  }
  return seq;
}

std::string format_sequence(const RecolorSequence& seq) {
  std::ostringstream out;
  for (const auto& s : seq) out << "recolor " << s.vertex << " -> " << s.color << '\n';
  return out.str();
}

Coloring random_proper_coloring(const PlaneGraph& g, int k, uint64_t seed) {
  if (k < 1 || k > 30) throw ColoringError("random coloring needs between 1 and 30 colors");
  std::vector<int> deg(g.n), order;
  std::vector<char> removed(g.n, 0);
  for (int v = 0; v < g.n; ++v) deg[v] = g.degree(v);
  order.reserve(g.n);
  for (int round = 0; round < g.n; ++round) {
    int pick = -1;
    for (int v = 0; v < g.n; ++v)
      if (!removed[v] && (pick == -1 || deg[v] < deg[pick])) pick = v;
    removed[pick] = 1;
    order.push_back(pick);
    for (int u : g.rot[pick])
      if (!removed[u]) --deg[u];
  }
  Rng rng(seed);
  Coloring c{k, std::vector<int>(g.n, 0)};
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    uint32_t used = 0;
    for (int u : g.rot[*it])
      if (c.colors[u]) used |= 1u << c.colors[u];
    std::vector<int> free;
    for (int x = 1; x <= k; ++x)
      if (!(used >> x & 1)) free.push_back(x);
    if (free.empty())
      throw ColoringError("random coloring stuck: no free color at vertex " +
                          std::to_string(*it));
    c.colors[*it] = free[rng.below(free.size())];
  }
  return c;
}

}  // namespace rcp
