#include "rcp/motif/reduce.hpp"

namespace rcp {

namespace {

// Relabel a reduced-motif witness back into the original labelling where
// vertex v was removed (old id w maps to w - (w > v)).
OOWitness unshift(const Motif& m, int v, const OOWitness& wr) {
  OOWitness w;
  w.gamma.assign(m.n, 0);
  for (int old = 0; old < m.n; ++old)
    if (old != v) w.gamma[old] = wr.gamma[old - (old > v)];
  for (int x : wr.order) w.order.push_back(x + (x >= v));
  return w;
}

// Smallest color of `mask`, or 0 when empty.
int first_color(uint16_t mask) { return mask ? __builtin_ctz(mask) + 1 : 0; }

}  // namespace

Motif reduce_delete(const Motif& m, int v, DeleteMode mode) {
  if (v < 0 || v >= m.n) throw MotifError("reduce_delete: vertex out of range");
  if (mode == DeleteMode::Plain) {
    if (m.list_size(v) <= m.deg(v) + m.degp(v))
      throw MotifError("reduce_delete: list of vertex " + std::to_string(v) +
                       " is not larger than deg + deg'");
  } else {
    if (m.alpha[v] != 10) throw MotifError("reduce_delete: vertex is not colored 10");
    if (m.list_size(v) <= m.deg(v))
      throw MotifError("reduce_delete: list of vertex " + std::to_string(v) +
                       " is not larger than deg");
  }
  return remove_vertex(m, v);
}

Motif reduce_forward(const Motif& m, int v, int c) {
  if (v < 0 || v >= m.n) throw MotifError("reduce_forward: vertex out of range");
  if (!m.in_list(v, c)) throw MotifError("reduce_forward: color not in the vertex's list");
  for (int u = 0; u < m.n; ++u)
    if (m.has_edge(v, u) && m.alpha[u] == c)
      throw MotifError("reduce_forward: color clashes with a neighbor's current color");
  Motif r = m;
  for (int u = 0; u < m.n; ++u)
    if (m.has_edge(v, u)) r.lists[u] &= static_cast<uint16_t>(~(1u << (c - 1)));
  return remove_vertex(r, v);
}

Motif reduce_reserve(const Motif& m, int v, int c) {
  if (v < 0 || v >= m.n) throw MotifError("reduce_reserve: vertex out of range");
  if (!m.in_list(v, c)) throw MotifError("reduce_reserve: color not in the vertex's list");
  Motif r = m;
  uint16_t drop = static_cast<uint16_t>(1u << (c - 1));
  if (m.alpha[v] <= 9) drop |= static_cast<uint16_t>(1u << (m.alpha[v] - 1));
  for (int u = 0; u < m.n; ++u)
    if (m.has_edge(v, u)) r.lists[u] &= static_cast<uint16_t>(~drop);
  return remove_vertex(r, v);
}

std::optional<int> xycons_choice(const Motif& m, int v) {
  uint16_t blocked = 0;
  for (int u = 0; u < m.n; ++u) {
    if (!m.has_edge(v, u)) continue;
    if (m.alpha[u] != 10) blocked |= static_cast<uint16_t>(1u << (m.alpha[u] - 1));
    if (m.list_size(u) == 1) blocked |= m.lists[u];
  }
  uint16_t free = static_cast<uint16_t>(m.lists[v] & ~blocked);
  if (!free) return std::nullopt;
  return first_color(free);
}

OOWitness lift_delete(const Motif& m, int v, DeleteMode mode, const OOWitness& wr) {
  OOWitness w = unshift(m, v, wr);
  uint16_t blocked = 0;
  for (int u = 0; u < m.n; ++u) {
    if (!m.has_edge(v, u)) continue;
    if (mode == DeleteMode::Plain && m.alpha[u] != 10)
      blocked |= static_cast<uint16_t>(1u << (m.alpha[u] - 1));
    blocked |= static_cast<uint16_t>(1u << (w.gamma[u] - 1));
  }
  int c = first_color(static_cast<uint16_t>(m.lists[v] & ~blocked));
  if (c == 0) throw MotifError("lift_delete: no free color; precondition violated");
  w.gamma[v] = c;
  if (mode == DeleteMode::Plain) {
    // v moves first: proper now (avoids current neighbor colors) and
    // forever (avoids every neighbor's target).
    if (c != m.alpha[v]) w.order.insert(w.order.begin(), v);
  } else {
    // alpha(v) == 10 never blocks anyone; v picks up a free color last.
    w.order.push_back(v);
  }
  return w;
}

OOWitness lift_forward(const Motif& m, int v, int c, const OOWitness& wr) {
  OOWitness w = unshift(m, v, wr);
  w.gamma[v] = c;
  if (c != m.alpha[v]) w.order.insert(w.order.begin(), v);
  return w;
}

OOWitness lift_reserve(const Motif& m, int v, int c, const OOWitness& wr) {
  OOWitness w = unshift(m, v, wr);
  w.gamma[v] = c;
  if (c != m.alpha[v]) w.order.push_back(v);
  return w;
}

}  // namespace rcp
