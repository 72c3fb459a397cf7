#include "rcp/motif/motif.hpp"

#include <algorithm>
#include <sstream>

#include "rcp/util/text.hpp"

namespace rcp {

Motif make_motif(int n, const std::vector<std::pair<int, int>>& edges,
                 const std::vector<int>& alpha, const std::vector<std::vector<int>>& lists) {
  Motif m;
  m.n = n;
  m.adj.assign(n, 0);
  m.alpha = alpha;
  m.lists.assign(n, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n || u == v) throw MotifError("bad edge");
    m.add_edge(u, v);
  }
  if (static_cast<int>(alpha.size()) != n) throw MotifError("alpha size mismatch");
  if (static_cast<int>(lists.size()) != n) throw MotifError("lists size mismatch");
  for (int v = 0; v < n; ++v)
    for (int c : lists[v]) {
      if (c < 1 || c > 9) throw MotifError("list color out of range");
      m.lists[v] |= 1u << (c - 1);
    }
  std::string err = motif_invariant_error(m);
  if (!err.empty()) throw MotifError(err);
  return m;
}

std::string motif_invariant_error(const Motif& m) {
  if (static_cast<int>(m.adj.size()) != m.n || static_cast<int>(m.alpha.size()) != m.n ||
      static_cast<int>(m.lists.size()) != m.n)
    return "field sizes do not match the vertex count";
  for (int v = 0; v < m.n; ++v) {
    if (m.adj[v] >> v & 1) return "self-loop at vertex " + std::to_string(v);
    if (m.n < 32 && (m.adj[v] >> m.n)) return "adjacency bit beyond vertex range";
    if (m.alpha[v] < 1 || m.alpha[v] > 10) return "color out of range at vertex " + std::to_string(v);
    if (m.lists[v] & ~kFullList) return "list outside {1..9} at vertex " + std::to_string(v);
    for (int u = 0; u < m.n; ++u)
      if ((m.adj[v] >> u & 1) != (m.adj[u] >> v & 1)) return "asymmetric adjacency";
  }
  for (int v = 0; v < m.n; ++v)
    for (int u = v + 1; u < m.n; ++u)
      if (m.has_edge(u, v) && m.alpha[u] == m.alpha[v])
        return "current coloring is improper on edge " + std::to_string(u) + "-" + std::to_string(v);
  return "";
}

Motif remove_vertex(const Motif& m, int v) {
  if (v < 0 || v >= m.n) throw MotifError("remove_vertex: vertex out of range");
  Motif r;
  r.n = m.n - 1;
  r.adj.assign(r.n, 0);
  for (int w = 0; w < m.n; ++w) {
    if (w == v) continue;
    int nw = w - (w > v);
    r.alpha.push_back(m.alpha[w]);
    r.lists.push_back(m.lists[w]);
    for (int u = 0; u < m.n; ++u) {
      if (u == v || !m.has_edge(w, u)) continue;
      r.adj[nw] |= 1u << (u - (u > v));
    }
  }
  return r;
}

Motif apply_color_permutation(const Motif& m, const std::vector<int>& perm) {
  if (perm.size() != 11 || perm[10] != 10) throw MotifError("bad color permutation");
  Motif r = m;
  for (int v = 0; v < m.n; ++v) {
    r.alpha[v] = perm[m.alpha[v]];
    uint16_t nl = 0;
    for (int c = 1; c <= 9; ++c)
      if (m.in_list(v, c)) nl |= 1u << (perm[c] - 1);
    r.lists[v] = nl;
  }
  return r;
}

DescriptionVector parse_description(const std::string& text) {
  DescriptionVector d;
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw ParseError("description vector: missing parentheses in '" + text + "'");
  s = s.substr(1, s.size() - 2);
  int group_start = -1;
  size_t i = 0;
  auto entry_index = [&] { return static_cast<int>(d.entries.size()); };
  while (i < s.size()) {
    if (s[i] == '[') {
      if (group_start != -1) throw ParseError("description vector: nested brackets");
      group_start = entry_index();
      ++i;
      continue;
    }
    // One entry: integer or wildcard, optionally followed by ']' and ','.
    DescriptionVector::Entry e;
    if (s[i] == '*') {
      e.wildcard = true;
      ++i;
    } else if (s.compare(i, 3, "\xe2\x80\xa2") == 0) {  // UTF-8 bullet
      e.wildcard = true;
      i += 3;
    } else {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j == i) throw ParseError("description vector: bad entry near '" + s.substr(i) + "'");
      e.size = std::stoi(s.substr(i, j - i));
      i = j;
    }
    d.entries.push_back(e);
    if (i < s.size() && s[i] == ']') {
      if (group_start == -1) throw ParseError("description vector: unmatched ']'");
      d.bracket_groups.push_back({group_start, entry_index() - 1});
      group_start = -1;
      ++i;
    }
    if (i < s.size()) {
      if (s[i] != ',') throw ParseError("description vector: expected ',' near '" + s.substr(i) + "'");
      ++i;
    }
  }
  if (group_start != -1) throw ParseError("description vector: unterminated bracket");
  if (d.entries.empty()) throw ParseError("description vector: no entries");
  return d;
}

std::string format_description(const DescriptionVector& d) {
  std::ostringstream out;
  out << '(';
  for (size_t i = 0; i < d.entries.size(); ++i) {
    for (const auto& g : d.bracket_groups)
      if (g.first == static_cast<int>(i)) out << '[';
    if (d.entries[i].wildcard)
      out << '*';
    else
      out << d.entries[i].size;
    for (const auto& g : d.bracket_groups)
      if (g.second == static_cast<int>(i)) out << ']';
    if (i + 1 < d.entries.size()) out << ',';
  }
  out << ')';
  return out.str();
}

bool describes(const Motif& m, const DescriptionVector& d) {
  if (static_cast<int>(d.entries.size()) != m.n)
    throw MotifError("description vector length does not match the motif");
  for (int v = 0; v < m.n; ++v)
    if (!d.entries[v].wildcard && m.list_size(v) < d.entries[v].size) return false;
  for (const auto& [a, b] : d.bracket_groups) {
    bool has10 = false;
    for (int v = a; v <= b; ++v)
      if (m.alpha[v] == 10) has10 = true;
    if (!has10) return false;
  }
  return true;
}

namespace {

void subsets_of_size(uint16_t mask, int want, std::vector<uint16_t>& out) {
  std::vector<int> bits;
  for (int b = 0; b < 9; ++b)
    if (mask >> b & 1) bits.push_back(b);
  std::vector<int> idx(want);
  // Lexicographic combinations of positions.
  for (int i = 0; i < want; ++i) idx[i] = i;
  int k = static_cast<int>(bits.size());
  if (want > k) return;
  while (true) {
    uint16_t sub = 0;
    for (int i : idx) sub |= 1u << bits[i];
    out.push_back(sub);
    int i = want - 1;
    while (i >= 0 && idx[i] == k - want + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < want; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<Motif> truncate_to(const Motif& m, const DescriptionVector& d) {
  if (!describes(m, d)) throw MotifError("truncate_to: vector does not describe the motif");
  std::vector<Motif> result{m};
  for (int v = 0; v < m.n; ++v) {
    if (d.entries[v].wildcard || m.list_size(v) == d.entries[v].size) continue;
    std::vector<uint16_t> subs;
    subsets_of_size(m.lists[v], d.entries[v].size, subs);
    std::vector<Motif> next;
    next.reserve(result.size() * subs.size());
    for (const Motif& base : result)
      for (uint16_t sub : subs) {
        next.push_back(base);
        next.back().lists[v] = sub;
      }
    result = std::move(next);
  }
  return result;
}

Motif parse_motif(const std::string& text) {
  std::vector<std::string> lines;
  for (const auto& raw : split_lines(text)) {
    auto s = strip_comment(raw);
    if (!s.empty()) lines.push_back(s);
  }
  if (lines.empty()) throw ParseError("motif file: empty");
  auto head = split_ws(lines[0]);
  int n;
  if (head.size() != 2 || head[0] != "vertices" || !parse_int(head[1], n) || n < 1)
    throw ParseError("motif file: bad 'vertices' line");
  std::vector<std::pair<int, int>> edges;
  std::vector<int> alpha;
  std::vector<std::vector<int>> lists(n);
  std::vector<bool> list_seen(n, false);
  bool alpha_seen = false;
  for (size_t li = 1; li < lines.size(); ++li) {
    auto toks = split_ws(lines[li]);
    if (toks[0] == "edges:") {
      for (size_t i = 1; i < toks.size(); ++i) {
        auto dash = toks[i].find('-');
        int a, b;
        if (dash == std::string::npos || !parse_int(toks[i].substr(0, dash), a) ||
            !parse_int(toks[i].substr(dash + 1), b))
          throw ParseError("motif file: bad edge token '" + toks[i] + "'");
        edges.push_back({a - 1, b - 1});
      }
    } else if (toks[0] == "alpha:") {
      for (size_t i = 1; i < toks.size(); ++i) {
        int c;
        if (!parse_int(toks[i], c)) throw ParseError("motif file: bad alpha token '" + toks[i] + "'");
        alpha.push_back(c);
      }
      alpha_seen = true;
    } else if (toks[0] == "L") {
      int v;
      if (toks.size() < 2 || toks[1].back() != ':' ||
          !parse_int(toks[1].substr(0, toks[1].size() - 1), v) || v < 1 || v > n)
        throw ParseError("motif file: bad list header on line '" + lines[li] + "'");
      if (list_seen[v - 1]) throw ParseError("motif file: duplicate list for vertex " + std::to_string(v));
      list_seen[v - 1] = true;
      for (size_t i = 2; i < toks.size(); ++i) {
        int c;
        if (!parse_int(toks[i], c)) throw ParseError("motif file: bad list color '" + toks[i] + "'");
        lists[v - 1].push_back(c);
      }
    } else {
      throw ParseError("motif file: unrecognized line '" + lines[li] + "'");
    }
  }
  if (!alpha_seen || static_cast<int>(alpha.size()) != n)
    throw ParseError("motif file: alpha line missing or wrong length");
  return make_motif(n, edges, alpha, lists);
}

std::string format_motif(const Motif& m) {
  std::ostringstream out;
  out << "vertices " << m.n << "\nedges:";
  for (int u = 0; u < m.n; ++u)
    for (int v = u + 1; v < m.n; ++v)
      if (m.has_edge(u, v)) out << ' ' << u + 1 << '-' << v + 1;
  out << "\nalpha:";
  for (int c : m.alpha) out << ' ' << c;
  out << '\n';
  for (int v = 0; v < m.n; ++v) {
    out << "L " << v + 1 << ':';
    for (int c = 1; c <= 9; ++c)
      if (m.in_list(v, c)) out << ' ' << c;
    out << '\n';
  }
  return out.str();
}

}  // namespace rcp
