#include "rcp/catalog/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "rcp/util/text.hpp"

namespace rcp {

namespace detail {
const char* catalog_default_text();
}

int mark_bound(Mark m) {
  switch (m) {
    case Mark::Eq5: return 5;
    case Mark::Le6: return 6;
    default: return 7;
  }
}

std::string mark_token(Mark m) {
  switch (m) {
    case Mark::Eq5: return "eq5";
    case Mark::Le6: return "le6";
    default: return "le7";
  }
}

bool parse_mark(const std::string& tok, Mark& out) {
  if (tok == "eq5") out = Mark::Eq5;
  else if (tok == "le6") out = Mark::Le6;
  else if (tok == "le7") out = Mark::Le7;
  else return false;
  return true;
}

std::string format_hypothesis(const Hypothesis& h) {
  auto label = [](int v) { return "v" + std::to_string(v + 1); };
  switch (h.kind) {
    case Hypothesis::Kind::Nbhd10:
      return "nbhd10";
    case Hypothesis::Kind::Sat10:
      return "sat10(" + label(h.verts[0]) + ")";
    case Hypothesis::Kind::Pair55:
      return "pair55(" + label(h.verts[0]) + "," + label(h.verts[1]) + ")";
    case Hypothesis::Kind::Tri56:
      return "tri56(" + label(h.verts[0]) + ";" + label(h.verts[1]) + "," +
             label(h.verts[2]) + ")";
    default:
      return "fan10(" + label(h.verts[0]) + "," + label(h.verts[1]) + "," +
             label(h.verts[2]) + "," + label(h.verts[3]) + ")";
  }
}

bool ConfigurationTemplate::has_edge(int a, int b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
}

int ConfigurationTemplate::pattern_deg(int v) const {
  int d = 0;
  for (const auto& [a, b] : edges)
    if (a == v || b == v) ++d;
  return d;
}

std::vector<uint32_t> ConfigurationTemplate::adjacency_masks() const {
  std::vector<uint32_t> adj(n, 0);
  for (const auto& [a, b] : edges) {
    adj[a] |= 1u << b;
    adj[b] |= 1u << a;
  }
  return adj;
}

bool ConfigurationTemplate::has_flag(Hypothesis::Kind k) const {
  for (const auto& h : hypotheses)
    if (h.kind == k) return true;
  return false;
}

const ConfigurationTemplate& Catalog::by_id(const std::string& id) const {
  for (const auto& t : templates)
    if (t.id == id) return t;
  throw CatalogError("unknown configuration id: " + id);
}

std::vector<Hypothesis> derive_hypotheses(const ConfigurationTemplate& t) {
  std::vector<Hypothesis> out;
  out.push_back({Hypothesis::Kind::Nbhd10, {}});
  for (int v = 0; v < t.n; ++v)
    if (t.pattern_deg(v) == mark_bound(t.marks[v]))
      out.push_back({Hypothesis::Kind::Sat10, {v}});
  for (const auto& [a, b] : t.edges)
    if (t.marks[a] == Mark::Eq5 && t.marks[b] == Mark::Eq5)
      out.push_back({Hypothesis::Kind::Pair55, {a, b}});
  for (int a = 0; a < t.n; ++a) {
    if (t.marks[a] != Mark::Eq5) continue;
    for (int b = 0; b < t.n; ++b) {
      if (b == a || !t.has_edge(a, b) || t.marks[b] == Mark::Le7) continue;
      for (int c = b + 1; c < t.n; ++c) {
        if (c == a || !t.has_edge(a, c) || !t.has_edge(b, c)) continue;
        if (t.marks[c] == Mark::Le7) continue;
        out.push_back({Hypothesis::Kind::Tri56, {a, b, c}});
      }
    }
  }
  // Induced 4-vertex fans: exactly one non-adjacent pair (the ends).
  for (int p = 0; p < t.n; ++p)
    for (int q = p + 1; q < t.n; ++q)
      for (int r = q + 1; r < t.n; ++r)
        for (int s = r + 1; s < t.n; ++s) {
          int four[4] = {p, q, r, s};
          std::vector<std::pair<int, int>> missing;
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
              if (!t.has_edge(four[i], four[j])) missing.push_back({four[i], four[j]});
          if (missing.size() != 1) continue;
          auto [e1, e2] = missing[0];
          int mids[2], k = 0;
          for (int x : four)
            if (x != e1 && x != e2) mids[k++] = x;
          bool end5 = (t.marks[e1] == Mark::Eq5 && t.marks[e2] != Mark::Le7) ||
                      (t.marks[e2] == Mark::Eq5 && t.marks[e1] != Mark::Le7);
          bool mid6 = t.marks[mids[0]] != Mark::Le7 || t.marks[mids[1]] != Mark::Le7;
          if (end5 && mid6)
            out.push_back({Hypothesis::Kind::Fan10, {mids[0], e1, mids[1], e2}});
        }
  return out;
}

bool alpha_satisfies(const ConfigurationTemplate& t, const std::vector<int>& alpha) {
  if ((int)alpha.size() != t.n) return false;
  for (int c : alpha)
    if (c < 1 || c > 10) return false;
  for (const auto& [a, b] : t.edges)
    if (alpha[a] == alpha[b]) return false;
  for (const auto& h : t.hypotheses) {
    switch (h.kind) {
      case Hypothesis::Kind::Nbhd10:
        break;
      case Hypothesis::Kind::Sat10: {
        int v = h.verts[0];
        bool seen = alpha[v] == 10;
        for (int u = 0; u < t.n && !seen; ++u)
          if (t.has_edge(v, u) && alpha[u] == 10) seen = true;
        if (!seen) return false;
        break;
      }
      default: {
        bool seen = false;
        for (int v : h.verts)
          if (alpha[v] == 10) seen = true;
        if (!seen) return false;
      }
    }
  }
  return true;
}

int min_list_size(const ConfigurationTemplate& t, int v, const std::vector<int>& alpha) {
  int base = 9 - 2 * (mark_bound(t.marks[v]) - t.pattern_deg(v));
  if (t.has_flag(Hypothesis::Kind::Nbhd10)) {
    bool ten = alpha[v] == 10;
    for (int u = 0; u < t.n && !ten; ++u)
      if (t.has_edge(v, u) && alpha[u] == 10) ten = true;
    if (!ten) ++base;
  }
  return base;
}

std::vector<int> min_list_sizes(const ConfigurationTemplate& t, const std::vector<int>& alpha) {
  std::vector<int> s(t.n);
  for (int v = 0; v < t.n; ++v) s[v] = min_list_size(t, v, alpha);
  return s;
}

namespace {

int parse_vertex_label(const std::string& tok, int n, const std::string& where) {
  int idx;
  if (tok.size() < 2 || tok[0] != 'v' || !parse_int(tok.substr(1), idx) || idx < 1 ||
      idx > n)
    throw CatalogError(where + ": bad vertex label '" + tok + "'");
  return idx - 1;
}

Hypothesis parse_hypothesis(const std::string& tok, int n, const std::string& where) {
  if (tok == "nbhd10") return {Hypothesis::Kind::Nbhd10, {}};
  auto open = tok.find('(');
  if (open == std::string::npos || tok.back() != ')')
    throw CatalogError(where + ": bad hypothesis '" + tok + "'");
  std::string head = tok.substr(0, open);
  std::string args = tok.substr(open + 1, tok.size() - open - 2);
  for (char& ch : args)
    if (ch == ',' || ch == ';') ch = ' ';
  std::vector<int> verts;
  for (const auto& a : split_ws(args)) verts.push_back(parse_vertex_label(a, n, where));
  auto expect = [&](Hypothesis::Kind k, size_t m) {
    if (verts.size() != m)
      throw CatalogError(where + ": hypothesis '" + tok + "' expects " +
                         std::to_string(m) + " vertices");
    return Hypothesis{k, verts};
  };
  if (head == "sat10") return expect(Hypothesis::Kind::Sat10, 1);
  if (head == "pair55") return expect(Hypothesis::Kind::Pair55, 2);
  if (head == "tri56") return expect(Hypothesis::Kind::Tri56, 3);
  if (head == "fan10") return expect(Hypothesis::Kind::Fan10, 4);
  throw CatalogError(where + ": unknown hypothesis '" + head + "'");
}

std::vector<std::string> parse_quoted(const std::string& rest, const std::string& where) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < rest.size()) {
    if (std::isspace((unsigned char)rest[i])) {
      ++i;
      continue;
    }
    if (rest[i] != '"') throw CatalogError(where + ": expected quoted vector");
    auto close = rest.find('"', i + 1);
    if (close == std::string::npos) throw CatalogError(where + ": unterminated quote");
    out.push_back(rest.substr(i + 1, close - i - 1));
    i = close + 1;
  }
  return out;
}

// Every integer entry must be reachable as 9 - 2*(d - deg_pattern) + b
// with deg_pattern <= d <= bound, d >= 5, b in {0,1}.
void check_vector(const ConfigurationTemplate& t, const DescriptionVector& d,
                  const std::string& text) {
  std::string where = "catalog " + t.id + ": vector \"" + text + "\"";
  if ((int)d.entries.size() != t.n)
    throw CatalogError(where + " has " + std::to_string(d.entries.size()) +
                       " entries for " + std::to_string(t.n) + " vertices");
  for (int v = 0; v < t.n; ++v) {
    if (d.entries[v].wildcard) continue;
    int s = d.entries[v].size;
    int degc = t.pattern_deg(v);
    bool ok = false;
    for (int deg = std::max(5, degc); deg <= mark_bound(t.marks[v]) && !ok; ++deg)
      for (int b = 0; b <= 1 && !ok; ++b)
        if (s == 9 - 2 * (deg - degc) + b) ok = true;
    if (!ok)
      throw CatalogError(where + ": entry v" + std::to_string(v + 1) + "=" +
                         std::to_string(s) + " unreachable for mark " +
                         mark_token(t.marks[v]) + " (pattern degree " +
                         std::to_string(degc) + ")");
  }
  for (const auto& [lo, hi] : d.bracket_groups)
    if (lo < 0 || hi >= t.n || lo > hi)
      throw CatalogError(where + ": bracket group out of range");
}

void validate_template(ConfigurationTemplate& t) {
  if (t.n < 1) throw CatalogError("catalog " + t.id + ": no marks");
  std::sort(t.edges.begin(), t.edges.end());
  for (size_t i = 0; i + 1 < t.edges.size(); ++i)
    if (t.edges[i] == t.edges[i + 1])
      throw CatalogError("catalog " + t.id + ": duplicate edge");
  for (const auto& [a, b] : t.edges)
    if (a == b) throw CatalogError("catalog " + t.id + ": self-loop");
  for (int v = 0; v < t.n; ++v)
    if (t.pattern_deg(v) > mark_bound(t.marks[v]))
      throw CatalogError("catalog " + t.id + ": v" + std::to_string(v + 1) +
                         " has pattern degree above its mark bound");
  if (t.vectors.empty()) throw CatalogError("catalog " + t.id + ": no vectors");
  for (size_t i = 0; i < t.vectors.size(); ++i)
    check_vector(t, t.vectors[i], t.vector_text[i]);

  auto derived = derive_hypotheses(t);
  auto listed = t.hypotheses;
  auto key = [](const Hypothesis& h) { return std::make_pair((int)h.kind, h.verts); };
  auto cmp = [&](const Hypothesis& a, const Hypothesis& b) { return key(a) < key(b); };
  std::sort(derived.begin(), derived.end(), cmp);
  std::sort(listed.begin(), listed.end(), cmp);
  if (derived != listed) {
    std::string msg = "catalog " + t.id + ": hypothesis mismatch; derived {";
    for (const auto& h : derived) msg += " " + format_hypothesis(h);
    msg += " } vs listed {";
    for (const auto& h : listed) msg += " " + format_hypothesis(h);
    msg += " }";
    throw CatalogError(msg);
  }
}

}  // namespace

Catalog load_catalog(const std::string& text) {
  Catalog cat;
  ConfigurationTemplate cur;
  bool open = false;
  auto flush = [&]() {
    if (!open) return;
    validate_template(cur);
    cat.templates.push_back(cur);
    cur = {};
    open = false;
  };
  for (const auto& raw : split_lines(text)) {
    std::string line = strip_comment(raw);
    if (line.empty()) continue;
    auto colon = line.find(':');
    std::string head = colon == std::string::npos ? line.substr(0, line.find(' '))
                                                  : line.substr(0, colon);
    std::string rest = colon == std::string::npos
                           ? (line.size() > head.size() ? line.substr(head.size() + 1) : "")
                           : line.substr(colon + 1);
    if (head == "config") {
      flush();
      cur.id = split_ws(rest).empty() ? "" : split_ws(rest)[0];
      if (cur.id.empty()) throw CatalogError("config line without an id");
      open = true;
    } else if (!open) {
      throw CatalogError("directive before any config block: " + line);
    } else if (head == "marks") {
      auto toks = split_ws(rest);
      cur.n = (int)toks.size();
      cur.marks.resize(cur.n);
      std::vector<bool> seen(cur.n, false);
      for (const auto& tok : toks) {
        auto eq = tok.find('=');
        if (eq == std::string::npos)
          throw CatalogError("catalog " + cur.id + ": bad mark '" + tok + "'");
        int v = parse_vertex_label(tok.substr(0, eq), cur.n, "catalog " + cur.id);
        if (seen[v]) throw CatalogError("catalog " + cur.id + ": duplicate mark for v" +
                                        std::to_string(v + 1));
        seen[v] = true;
        if (!parse_mark(tok.substr(eq + 1), cur.marks[v]))
          throw CatalogError("catalog " + cur.id + ": bad mark token '" + tok + "'");
      }
    } else if (head == "edges") {
      for (const auto& tok : split_ws(rest)) {
        auto dash = tok.find('-');
        if (dash == std::string::npos)
          throw CatalogError("catalog " + cur.id + ": bad edge '" + tok + "'");
        int a = parse_vertex_label(tok.substr(0, dash), cur.n, "catalog " + cur.id);
        int b = parse_vertex_label(tok.substr(dash + 1), cur.n, "catalog " + cur.id);
        if (a > b) std::swap(a, b);
        cur.edges.push_back({a, b});
      }
    } else if (head == "hypotheses") {
      for (const auto& tok : split_ws(rest))
        cur.hypotheses.push_back(parse_hypothesis(tok, cur.n, "catalog " + cur.id));
    } else if (head == "vectors") {
      for (const auto& q : parse_quoted(rest, "catalog " + cur.id)) {
        cur.vector_text.push_back(q);
        cur.vectors.push_back(parse_description(q));
      }
    } else {
      throw CatalogError("catalog " + cur.id + ": unknown directive '" + head + "'");
    }
  }
  flush();
  if (cat.templates.empty()) throw CatalogError("empty catalog");
  return cat;
}

std::string default_catalog_text() { return detail::catalog_default_text(); }

const Catalog& default_catalog() {
  static const Catalog cat = load_catalog(detail::catalog_default_text());
  return cat;
}

}  // namespace rcp
