#include "rcp/catalog/base_lemmas.hpp"

#include <chrono>
#include <functional>
#include <stdexcept>

#include "rcp/catalog/game.hpp"
#include "rcp/motif/oo.hpp"

namespace rcp {

namespace {

using Edges = std::vector<std::pair<int, int>>;

// Proper colorings with colors renamed by first use (10 kept as-is); the
// new-color pruning emits exactly one representative per renaming class.
std::vector<std::vector<int>> coloring_classes(int n, const Edges& edges) {
  std::vector<uint32_t> adj(n, 0);
  for (auto [a, b] : edges) {
    adj[a] |= 1u << b;
    adj[b] |= 1u << a;
  }
  std::vector<std::vector<int>> out;
  std::vector<int> alpha(n, 0);
  std::function<void(int, int)> rec = [&](int v, int used) {
    if (v == n) {
      out.push_back(alpha);
      return;
    }
    auto ok = [&](int c) {
      for (int u = 0; u < v; ++u)
        if ((adj[v] >> u & 1) && alpha[u] == c) return false;
      return true;
    };
    for (int c = 1; c <= std::min(used + 1, 9); ++c)
      if (ok(c)) {
        alpha[v] = c;
        rec(v + 1, std::max(used, c));
      }
    if (ok(10)) {
      alpha[v] = 10;
      rec(v + 1, used);
    }
    alpha[v] = 0;
  };
  rec(0, 0);
  return out;
}

bool has_ten(const std::vector<int>& alpha) {
  for (int c : alpha)
    if (c == 10) return true;
  return false;
}

// nullptr filter accepts every coloring; nullptr family claims "always
// recolorable". A family predicate must characterize the non-recolorable
// instances exactly.
struct LemmaSpec {
  int n;
  Edges edges;
  std::vector<int> sizes;
  bool (*alpha_filter)(const std::vector<int>&);
  bool (*family)(const Motif&);
};

void run_literal(const LemmaSpec& spec, LemmaReport& rep) {
  std::vector<std::vector<uint16_t>> choices(spec.n);
  for (int v = 0; v < spec.n; ++v)
    for (uint16_t mask = 1; mask < 512; ++mask)
      if (__builtin_popcount(mask) == spec.sizes[v]) choices[v].push_back(mask);
  Motif m;
  m.n = spec.n;
  m.adj.assign(spec.n, 0);
  for (auto [a, b] : spec.edges) {
    m.adj[a] |= 1u << b;
    m.adj[b] |= 1u << a;
  }
  m.lists.assign(spec.n, 0);
  for (const auto& alpha : coloring_classes(spec.n, spec.edges)) {
    if (spec.alpha_filter && !spec.alpha_filter(alpha)) continue;
    ++rep.classes;
    m.alpha = alpha;
    std::vector<size_t> idx(spec.n, 0);
    while (true) {
      for (int v = 0; v < spec.n; ++v) m.lists[v] = choices[v][idx[v]];
      ++rep.instances;
      bool oo = oo_recolorable(m).yes;
      bool fam = spec.family && spec.family(m);
      if (oo) ++rep.recolorable;
      if (fam) ++rep.exceptional;
      if (oo == fam) {
        rep.verified = false;
        rep.failure = fam ? "exceptional instance has a recoloring witness"
                          : "instance outside the exceptional family has no witness";
        rep.counterexample = m;
        return;
      }
      int v = spec.n - 1;
      while (v >= 0 && ++idx[v] == choices[v].size()) idx[v--] = 0;
      if (v < 0) break;
    }
  }
  rep.verified = true;
}

// Universal claim via the deletion game instead of the literal product;
// only for claims without exceptional families.
void run_game(const LemmaSpec& spec, LemmaReport& rep) {
  std::vector<uint32_t> adj(spec.n, 0);
  for (auto [a, b] : spec.edges) {
    adj[a] |= 1u << b;
    adj[b] |= 1u << a;
  }
  GameMemo memo;
  for (const auto& alpha : coloring_classes(spec.n, spec.edges)) {
    if (spec.alpha_filter && !spec.alpha_filter(alpha)) continue;
    ++rep.classes;
    auto res = play_deletion_game(adj, alpha, spec.sizes, {}, memo);
    rep.instances += res.stats.nodes;
    if (!res.verified) {
      rep.verified = false;
      rep.failure = "deletion game refuted the universal claim";
      rep.counterexample = res.counterexample;
      return;
    }
  }
  rep.verified = true;
}

uint16_t color_mask(std::initializer_list<int> colors) {
  uint16_t mask = 0;
  for (int c : colors) mask |= uint16_t(1) << (c - 1);
  return mask;
}

bool edge_family(const Motif& m) {
  if (has_ten(m.alpha)) return false;
  return m.lists[0] == color_mask({m.alpha[0], m.alpha[1]}) &&
         m.lists[1] == color_mask({m.alpha[0]});
}

bool triangle_family(const Motif& m) {
  if (has_ten(m.alpha)) return false;
  uint16_t all3 = color_mask({m.alpha[0], m.alpha[1], m.alpha[2]});
  uint16_t first2 = color_mask({m.alpha[0], m.alpha[1]});
  return m.lists[0] == all3 && m.lists[1] == all3 && (m.lists[2] & ~first2) == 0;
}

bool any_alpha(const std::vector<int>&) { return true; }
bool with_ten(const std::vector<int>& a) { return has_ten(a); }
bool without_ten(const std::vector<int>& a) { return !has_ten(a); }

void single_vertex(LemmaReport& rep) {
  Motif m;
  m.n = 1;
  m.adj = {0};
  m.lists = {0};
  for (int a : {1, 10}) {
    ++rep.classes;
    m.alpha = {a};
    for (uint16_t mask = 1; mask < 512; ++mask) {
      m.lists[0] = mask;
      ++rep.instances;
      if (oo_recolorable(m).yes) {
        ++rep.recolorable;
        continue;
      }
      rep.verified = false;
      rep.failure = "single vertex with a nonempty list has no witness";
      rep.counterexample = m;
      return;
    }
  }
  rep.verified = true;
}

// Every graph on at most three vertices, each list one larger than the
// degree; checked literally.
void lists_exceed_degree(LemmaReport& rep) {
  std::vector<std::pair<int, Edges>> graphs = {
      {1, {}},           {2, {}},
      {2, {{0, 1}}},     {3, {}},
      {3, {{0, 1}}},     {3, {{0, 1}, {1, 2}}},
      {3, {{0, 1}, {1, 2}, {0, 2}}},
  };
  for (const auto& [n, edges] : graphs) {
    std::vector<int> deg(n, 0);
    for (auto [a, b] : edges) {
      ++deg[a];
      ++deg[b];
    }
    std::vector<int> sizes(n);
    for (int v = 0; v < n; ++v) sizes[v] = deg[v] + 1;
    LemmaReport part;
    run_literal({n, edges, sizes, any_alpha, nullptr}, part);
    rep.classes += part.classes;
    rep.instances += part.instances;
    rep.recolorable += part.recolorable;
    if (!part.verified) {
      rep.verified = false;
      rep.failure = part.failure;
      rep.counterexample = part.counterexample;
      return;
    }
  }
  rep.verified = true;
}

const Edges kEdge = {{0, 1}};
const Edges kPath = {{0, 1}, {1, 2}};
const Edges kTriangle = {{0, 1}, {1, 2}, {0, 2}};
const Edges kFan = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}};  // ends 1 and 3

const LemmaSpec kEdge21 = {2, kEdge, {2, 1}, any_alpha, edge_family};
const LemmaSpec kPath222 = {3, kPath, {2, 2, 2}, with_ten, nullptr};
const LemmaSpec kPath141 = {3, kPath, {1, 4, 1}, any_alpha, nullptr};
const LemmaSpec kTri431 = {3, kTriangle, {4, 3, 1}, any_alpha, nullptr};
const LemmaSpec kTri331 = {3, kTriangle, {3, 3, 1}, any_alpha, triangle_family};
const LemmaSpec kTri332 = {3, kTriangle, {3, 3, 2}, any_alpha, triangle_family};
const LemmaSpec kEdge22 = {2, kEdge, {2, 2}, without_ten, nullptr};
const LemmaSpec kTri422 = {3, kTriangle, {4, 2, 2}, without_ten, nullptr};
const LemmaSpec kFan2442 = {4, kFan, {2, 4, 4, 2}, without_ten, nullptr};

struct NamedCheck {
  const char* name;
  const LemmaSpec* spec;  // null for the two bespoke checks below
  bool game;              // universal claims may run the deletion game
  void (*special)(LemmaReport&);
};

const NamedCheck kChecks[] = {
    {"single-vertex", nullptr, false, single_vertex},
    {"lists-exceed-degree", nullptr, false, lists_exceed_degree},
    {"edge-2-1", &kEdge21, false, nullptr},
    {"path-2-2-2-ten", &kPath222, false, nullptr},
    {"path-1-4-1", &kPath141, false, nullptr},
    {"triangle-4-3-1", &kTri431, false, nullptr},
    {"triangle-3-3-1", &kTri331, false, nullptr},
    {"triangle-3-3-2", &kTri332, false, nullptr},
    {"edge-2-2-no-ten", &kEdge22, false, nullptr},
    {"triangle-4-2-2-no-ten", &kTri422, false, nullptr},
    {"fan-2-4-4-2-no-ten", &kFan2442, true, nullptr},
};

}  // namespace

std::vector<std::string> base_lemma_names() {
  std::vector<std::string> out;
  for (const auto& c : kChecks) out.push_back(c.name);
  return out;
}

LemmaReport verify_base_lemma(const std::string& name) {
  for (const auto& c : kChecks) {
    if (name != c.name) continue;
    LemmaReport rep;
    rep.name = name;
    auto t0 = std::chrono::steady_clock::now();
    if (c.special) c.special(rep);
    else if (c.game) run_game(*c.spec, rep);
    else run_literal(*c.spec, rep);
    rep.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
  }
  throw std::out_of_range("unknown base lemma: " + name);
}

std::vector<LemmaReport> verify_base_lemmas() {
  std::vector<LemmaReport> out;
  for (const auto& c : kChecks) out.push_back(verify_base_lemma(c.name));
  return out;
}

}  // namespace rcp
