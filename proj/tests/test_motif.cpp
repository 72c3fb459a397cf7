#include <doctest.h>

#include <algorithm>
#include <optional>
#include <vector>

#include "rcp/motif/motif.hpp"
#include "rcp/motif/oo.hpp"
#include "rcp/motif/reduce.hpp"
#include "rcp/util/rng.hpp"
#include "rcp/util/text.hpp"

using namespace rcp;

namespace {

using Edges = std::vector<std::pair<int, int>>;
using Lists = std::vector<std::vector<int>>;

// Deterministic small random motifs for property checks.
Motif random_motif(Rng& rng, int max_n, int max_color) {
  int n = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(max_n)));
  Edges edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.below(2)) edges.push_back({u, v});
  Motif m = make_motif(n, edges, std::vector<int>(n, 1), Lists(n));
  // random proper alpha over {1..max_color} ∪ {10}
  for (int v = 0; v < n; ++v) {
    std::vector<int> free;
    for (int c = 1; c <= max_color; ++c) {
      bool ok = true;
      for (int u = 0; u < v; ++u)
        if (m.has_edge(u, v) && m.alpha[u] == c) ok = false;
      if (ok) free.push_back(c);
    }
    bool ten_ok = true;
    for (int u = 0; u < v; ++u)
      if (m.has_edge(u, v) && m.alpha[u] == 10) ten_ok = false;
    if (ten_ok) free.push_back(10);
    m.alpha[v] = free[rng.below(free.size())];
  }
  for (int v = 0; v < n; ++v) {
    uint16_t mask = 0;
    for (int c = 1; c <= max_color; ++c)
      if (rng.below(2)) mask |= static_cast<uint16_t>(1u << (c - 1));
    if (m.alpha[v] == 10 && mask == 0) mask = 1;  // vertices on 10 must move
    if (m.alpha[v] != 10 && mask == 0)
      mask = static_cast<uint16_t>(1u << (m.alpha[v] - 1));
    m.lists[v] = mask;
  }
  return m;
}

}  // namespace

TEST_CASE("make_motif and invariants") {
  Motif m = make_motif(2, {{0, 1}}, {1, 2}, {{1, 2}, {1}});
  CHECK(m.n == 2);
  CHECK(m.has_edge(0, 1));
  CHECK(m.deg(0) == 1);
  CHECK(m.list_size(0) == 2);
  CHECK(m.in_list(0, 2));
  CHECK_FALSE(m.in_list(0, 3));
  CHECK(motif_invariant_error(m).empty());

  Motif bad = m;
  bad.alpha = {1, 1};  // improper
  CHECK_FALSE(motif_invariant_error(bad).empty());
  CHECK_THROWS_AS(make_motif(2, {{0, 1}}, {1, 1}, {{1}, {1}}), MotifError);
}

TEST_CASE("degp counts neighbors not on color ten") {
  Motif m = make_motif(3, {{0, 1}, {0, 2}}, {1, 10, 2}, {{3}, {3}, {3}});
  CHECK(m.deg(0) == 2);
  CHECK(m.degp(0) == 1);
  CHECK(m.degp(1) == 2);
}

TEST_CASE("single vertex always recolorable to its one listed color") {
  Motif m = make_motif(1, {}, {3}, {{5}});
  OOResult r = oo_recolorable(m);
  REQUIRE(r.yes);
  CHECK(r.witness.gamma == std::vector<int>{5});
  CHECK(r.witness.order == std::vector<int>{0});
  CHECK(check_witness(m, r.witness).empty());
}

TEST_CASE("edge with the blocked singleton list is not recolorable") {
  // u must stay on or return to 1; v's only target is exactly u's color
  Motif m = make_motif(2, {{0, 1}}, {1, 2}, {{1, 2}, {1}});
  CHECK_FALSE(oo_recolorable(m).yes);
  CHECK_FALSE(oo_recolorable_bruteforce(m));
  // enlarging v's list resolves it
  Motif ok = make_motif(2, {{0, 1}}, {1, 2}, {{1, 2}, {1, 3}});
  CHECK(oo_recolorable(ok).yes);
}

TEST_CASE("an edge swap without a third color is impossible") {
  Motif m = make_motif(2, {{0, 1}}, {1, 2}, {{2}, {1}});
  CHECK_FALSE(oo_recolorable(m).yes);
  CHECK_FALSE(oo_recolorable_bruteforce(m));
}

TEST_CASE("path recoloring with forced order: middle first") {
  Motif m = make_motif(3, {{0, 1}, {1, 2}}, {1, 2, 1}, {{2}, {3}, {2}});
  OOResult r = oo_recolorable(m);
  REQUIRE(r.yes);
  CHECK(r.witness.gamma == std::vector<int>{2, 3, 2});
  REQUIRE(r.witness.order.size() == 3);
  CHECK(r.witness.order[0] == 1);  // center moves off 2 before the ends take it
  CHECK(check_witness(m, r.witness).empty());
}

TEST_CASE("witness checker rejects corrupted witnesses") {
  Motif m = make_motif(3, {{0, 1}, {1, 2}}, {1, 2, 1}, {{2}, {3}, {2}});
  OOWitness w = oo_recolorable(m).witness;
  OOWitness bad_order = w;
  std::swap(bad_order.order[0], bad_order.order[1]);
  CHECK_FALSE(check_witness(m, bad_order).empty());
  OOWitness off_list = w;
  off_list.gamma[1] = 4;
  CHECK_FALSE(check_witness(m, off_list).empty());
  OOWitness short_order = w;
  short_order.order.pop_back();
  CHECK_FALSE(check_witness(m, short_order).empty());
}

TEST_CASE("vertices colored ten are forced to move") {
  Motif stay = make_motif(1, {}, {10}, {{}});
  CHECK_FALSE(oo_recolorable(stay).yes);
  Motif move = make_motif(1, {}, {10}, {{7}});
  OOResult r = oo_recolorable(move);
  REQUIRE(r.yes);
  CHECK(r.witness.gamma == std::vector<int>{7});
}

TEST_CASE("decision procedure agrees with the brute-force oracle") {
  Rng rng(20260815);
  int yes = 0, no = 0;
  for (int trial = 0; trial < 400; ++trial) {
    Motif m = random_motif(rng, 4, 5);
    OOResult r = oo_recolorable(m);
    CHECK(r.yes == oo_recolorable_bruteforce(m));
    if (r.yes) {
      CHECK(check_witness(m, r.witness).empty());
      ++yes;
    } else {
      ++no;
    }
  }
  // the sample must exercise both verdicts
  CHECK(yes > 0);
  CHECK(no > 0);
}

TEST_CASE("color permutations preserve the verdict") {
  Rng rng(77);
  std::vector<int> perm(11);
  for (int trial = 0; trial < 60; ++trial) {
    Motif m = random_motif(rng, 4, 6);
    // random permutation of {1..9}, fixing 10
    for (int c = 1; c <= 9; ++c) perm[c] = c;
    for (int c = 9; c >= 2; --c)
      std::swap(perm[c], perm[1 + rng.below(static_cast<uint64_t>(c))]);
    perm[10] = 10;
    Motif p = apply_color_permutation(m, perm);
    CHECK(motif_invariant_error(p).empty());
    CHECK(oo_recolorable(m).yes == oo_recolorable(p).yes);
  }
}

TEST_CASE("enlarging a list never turns yes into no") {
  Rng rng(4242);
  for (int trial = 0; trial < 200; ++trial) {
    Motif m = random_motif(rng, 4, 4);
    if (!oo_recolorable(m).yes) continue;
    Motif bigger = m;
    int v = static_cast<int>(rng.below(static_cast<uint64_t>(m.n)));
    int c = 1 + static_cast<int>(rng.below(9));
    bigger.lists[v] |= static_cast<uint16_t>(1u << (c - 1));
    CHECK(oo_recolorable(bigger).yes);
  }
}

TEST_CASE("remove_vertex shifts labels and keeps data") {
  Motif m = make_motif(3, {{0, 1}, {1, 2}}, {1, 2, 3}, {{4}, {5}, {6}});
  Motif r = remove_vertex(m, 1);
  CHECK(r.n == 2);
  CHECK_FALSE(r.has_edge(0, 1));
  CHECK(r.alpha == std::vector<int>{1, 3});
  CHECK(r.lists[1] == m.lists[2]);
}

TEST_CASE("plain deletion needs the degree inequality") {
  // isolated vertex with one listed color: 1 > 0 + 0
  Motif iso = make_motif(1, {}, {5}, {{1}});
  Motif gone = reduce_delete(iso, 0, DeleteMode::Plain);
  CHECK(gone.n == 0);

  // path center with five listed colors and both neighbors off 10: 5 > 2+2
  Motif path = make_motif(3, {{0, 1}, {1, 2}}, {1, 2, 3},
                          {{2}, {1, 2, 3, 4, 5}, {1}});
  Motif rest = reduce_delete(path, 1, DeleteMode::Plain);
  CHECK(rest.n == 2);
  CHECK(rest.lists[0] == path.lists[0]);  // lists untouched

  // four listed colors are not enough: 4 > 2+2 fails
  Motif tight = make_motif(3, {{0, 1}, {1, 2}}, {1, 2, 3},
                           {{2}, {1, 2, 3, 4}, {1}});
  CHECK_THROWS_AS(reduce_delete(tight, 1, DeleteMode::Plain), MotifError);

  // a neighbor on color 10 relaxes the requirement: 4 > 2+1
  Motif relaxed = make_motif(3, {{0, 1}, {1, 2}}, {10, 2, 3},
                             {{2}, {1, 2, 3, 4}, {1}});
  CHECK(reduce_delete(relaxed, 1, DeleteMode::Plain).n == 2);
}

TEST_CASE("deletion of a vertex on color ten uses the weaker inequality") {
  Motif m = make_motif(3, {{0, 1}, {0, 2}}, {10, 1, 2}, {{1, 2, 3}, {3}, {3}});
  Motif r = reduce_delete(m, 0, DeleteMode::Colored10);
  CHECK(r.n == 2);

  Motif tight = make_motif(3, {{0, 1}, {0, 2}}, {10, 1, 2}, {{1, 2}, {3}, {3}});
  CHECK_THROWS_AS(reduce_delete(tight, 0, DeleteMode::Colored10), MotifError);
  // colored10 mode demands alpha(v) = 10
  CHECK_THROWS_AS(reduce_delete(m, 1, DeleteMode::Colored10), MotifError);
}

TEST_CASE("forward commitment removes the color from neighbor lists") {
  Motif m = make_motif(2, {{0, 1}}, {1, 2}, {{1, 2, 3}, {2, 3}});
  Motif r = reduce_forward(m, 0, 3);
  CHECK(r.n == 1);
  CHECK(r.alpha == std::vector<int>{2});
  CHECK(r.list_size(0) == 1);
  CHECK(r.in_list(0, 2));

  // the committed color must avoid every neighbor's current color
  CHECK_THROWS_AS(reduce_forward(m, 0, 2), MotifError);
  // and must come from the vertex's own list
  CHECK_THROWS_AS(reduce_forward(m, 0, 4), MotifError);
}

TEST_CASE("reservation removes both colors from neighbor lists") {
  Motif m = make_motif(2, {{0, 1}}, {1, 2}, {{1, 2, 5}, {5}});
  Motif r = reduce_reserve(m, 1, 5);
  CHECK(r.n == 1);
  // neighbor loses alpha(v) = 2 and the reserved 5
  CHECK(r.list_size(0) == 1);
  CHECK(r.in_list(0, 1));
  CHECK_THROWS_AS(reduce_reserve(m, 1, 4), MotifError);
}

TEST_CASE("forward choice avoiding singleton neighbor lists") {
  // v has neighbors on colors 1 and 2, one singleton list {3}; choice must
  // dodge {1, 2, 3}
  Motif m = make_motif(3, {{0, 1}, {0, 2}}, {5, 1, 2}, {{1, 3, 4}, {3}, {3, 4}});
  std::optional<int> c = xycons_choice(m, 0);
  REQUIRE(c.has_value());
  CHECK(*c == 4);

  // guarantee: |L(v)| > deg'(v) + #singleton-neighbors
  Rng rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    Motif t = random_motif(rng, 4, 6);
    for (int v = 0; v < t.n; ++v) {
      int singles = 0;
      for (int u = 0; u < t.n; ++u)
        if (t.has_edge(v, u) && t.list_size(u) == 1) ++singles;
      if (t.list_size(v) > t.degp(v) + singles) {
        std::optional<int> pick = xycons_choice(t, v);
        REQUIRE(pick.has_value());
        Motif red = reduce_forward(t, v, *pick);
        // singleton neighbor lists survive intact
        for (int u = 0; u < t.n; ++u) {
          if (!t.has_edge(v, u)) continue;
          int nu = u < v ? u : u - 1;
          if (t.list_size(u) == 1) CHECK(red.lists[nu] == t.lists[u]);
          CHECK(red.list_size(nu) >= t.list_size(u) - 1);
        }
      }
    }
  }
}

TEST_CASE("reductions are sound: lifted witnesses replay on the original") {
  Rng rng(31337);
  int lifted = 0;
  for (int trial = 0; trial < 500; ++trial) {
    Motif m = random_motif(rng, 4, 4);
    for (int v = 0; v < m.n; ++v) {
      // plain deletion
      if (m.list_size(v) > m.deg(v) + m.degp(v)) {
        Motif r = reduce_delete(m, v, DeleteMode::Plain);
        OOResult rr = oo_recolorable(r);
        if (rr.yes) {
          OOWitness w = lift_delete(m, v, DeleteMode::Plain, rr.witness);
          CHECK(check_witness(m, w).empty());
          ++lifted;
        }
      }
      // deletion of a 10-colored vertex
      if (m.alpha[v] == 10 && m.list_size(v) > m.deg(v)) {
        Motif r = reduce_delete(m, v, DeleteMode::Colored10);
        OOResult rr = oo_recolorable(r);
        if (rr.yes) {
          OOWitness w = lift_delete(m, v, DeleteMode::Colored10, rr.witness);
          CHECK(check_witness(m, w).empty());
          ++lifted;
        }
      }
      // forward commitment over each admissible color
      for (int c = 1; c <= 9; ++c) {
        if (!m.in_list(v, c)) continue;
        bool clash = false;
        for (int u = 0; u < m.n; ++u)
          if (m.has_edge(v, u) && m.alpha[u] == c) clash = true;
        if (!clash) {
          Motif r = reduce_forward(m, v, c);
          OOResult rr = oo_recolorable(r);
          if (rr.yes) {
            OOWitness w = lift_forward(m, v, c, rr.witness);
            CHECK(check_witness(m, w).empty());
            ++lifted;
          }
        }
        // reservation
        Motif r2 = reduce_reserve(m, v, c);
        OOResult rr2 = oo_recolorable(r2);
        if (rr2.yes) {
          OOWitness w2 = lift_reserve(m, v, c, rr2.witness);
          CHECK(check_witness(m, w2).empty());
          ++lifted;
        }
      }
    }
  }
  CHECK(lifted > 100);
}

TEST_CASE("description vectors parse, format and match") {
  DescriptionVector d = parse_description("(2,1)");
  REQUIRE(d.entries.size() == 2);
  CHECK(d.entries[0].size == 2);
  CHECK(d.bracket_groups.empty());

  DescriptionVector b = parse_description("(3,[3],5)");
  REQUIRE(b.bracket_groups.size() == 1);
  CHECK(b.bracket_groups[0] == std::pair<int, int>{1, 1});

  DescriptionVector g = parse_description("(2,[3,5],1)");
  REQUIRE(g.entries.size() == 4);
  CHECK(g.bracket_groups[0] == std::pair<int, int>{1, 2});

  DescriptionVector w = parse_description("(*,4,*)");
  CHECK(w.entries[0].wildcard);
  CHECK_FALSE(w.entries[1].wildcard);

  for (const char* text : {"(2,1)", "(3,[3],5)", "(2,[3,5],1)", "(*,4,*)"})
    CHECK(format_description(parse_description(text)) == text);
  CHECK_THROWS_AS(parse_description("2,1"), ParseError);
}

TEST_CASE("describes checks sizes and bracket groups") {
  Motif m = make_motif(2, {{0, 1}}, {1, 2}, {{1, 2}, {3, 4, 5}});
  CHECK(describes(m, parse_description("(2,1)")));
  CHECK(describes(m, parse_description("(2,3)")));
  CHECK_FALSE(describes(m, parse_description("(3,1)")));  // entry exceeds size
  CHECK(describes(m, parse_description("(*,1)")));
  // bracket group needs a vertex on color 10
  CHECK_FALSE(describes(m, parse_description("([2],1)")));
  Motif ten = make_motif(2, {{0, 1}}, {10, 2}, {{1, 2}, {3, 4, 5}});
  CHECK(describes(ten, parse_description("([2],1)")));
  CHECK_THROWS_AS(describes(m, parse_description("(2,1,1)")), MotifError);
}

TEST_CASE("truncations enumerate exact-size sublists") {
  Motif m = make_motif(1, {}, {4}, {{1, 2, 3}});
  auto both = truncate_to(m, parse_description("(2)"));
  CHECK(both.size() == 3);
  for (const auto& t : both) CHECK(t.list_size(0) == 2);

  auto same = truncate_to(m, parse_description("(3)"));
  REQUIRE(same.size() == 1);
  CHECK(same[0] == m);

  // wildcards keep the full list
  auto wild = truncate_to(m, parse_description("(*)"));
  REQUIRE(wild.size() == 1);
  CHECK(wild[0] == m);
}

TEST_CASE("a recolorable truncation certifies the full motif") {
  Rng rng(550);
  int hits = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Motif m = random_motif(rng, 3, 4);
    DescriptionVector d;
    d.entries.resize(m.n);
    bool ok = true;
    for (int v = 0; v < m.n; ++v) {
      if (m.list_size(v) == 0) ok = false;
      d.entries[v].size = std::max(1, m.list_size(v) - 1);
    }
    if (!ok) continue;
    for (const Motif& t : truncate_to(m, d)) {
      if (oo_recolorable(t).yes) {
        CHECK(oo_recolorable(m).yes);
        ++hits;
        break;
      }
    }
  }
  CHECK(hits > 20);
}

TEST_CASE("motif files round-trip") {
  Motif m = make_motif(3, {{0, 1}, {1, 2}}, {1, 10, 2}, {{2, 3}, {4}, {}});
  std::string text = format_motif(m);
  CHECK(parse_motif(text) == m);
  CHECK_THROWS_AS(parse_motif("vertices x"), ParseError);
}
