#include <doctest.h>

#include <algorithm>
#include <set>

#include "rcp/embed/generate.hpp"
#include "rcp/recolor/coloring.hpp"
#include "rcp/recolor/explore.hpp"
#include "rcp/util/text.hpp"
#include "test_helpers.hpp"

using namespace rcp;
using namespace rcp::testing;

namespace {

Coloring make_coloring(int k, std::vector<int> colors) {
  Coloring c;
  c.k = k;
  c.colors = std::move(colors);
  return c;
}

// Proper 6-coloring of the icosahedron giving antipodal vertices equal
// colors; with k = 6 such a coloring is frozen.
Coloring icosahedron_antipodal_coloring() {
  PlaneGraph ico = generate_named("icosahedron");
  Coloring c;
  c.k = 6;
  c.colors.assign(12, 0);
  int next = 1;
  for (int v = 0; v < 12; ++v) {
    if (c.colors[v] != 0) continue;
    c.colors[v] = next;
    c.colors[icosahedron_antipode(v)] = next;
    ++next;
  }
  REQUIRE(next == 7);
  REQUIRE(is_proper(ico, c));
  return c;
}

}  // namespace

TEST_CASE("is_proper detects conflicts") {
  PlaneGraph tri = make_cycle(3);
  CHECK(is_proper(tri, make_coloring(3, {1, 2, 3})));
  CHECK_FALSE(is_proper(tri, make_coloring(3, {1, 2, 2})));
  CHECK_THROWS_AS(is_proper(tri, make_coloring(3, {1, 2})), ColoringError);
  CHECK_THROWS_AS(is_proper(tri, make_coloring(3, {1, 2, 4})), ColoringError);
}

TEST_CASE("reconfig_moves lists exactly the legal single recolorings") {
  PlaneGraph tri = make_cycle(3);
  Coloring c = make_coloring(4, {1, 2, 3});
  auto moves = reconfig_moves(tri, c);
  REQUIRE(moves.size() == 3);
  for (const auto& m : moves) CHECK(m.color == 4);
  CHECK(moves[0].vertex == 0);
  CHECK(moves[1].vertex == 1);
  CHECK(moves[2].vertex == 2);

  // k = 3 on a triangle: no vertex can move
  CHECK(reconfig_moves(tri, make_coloring(3, {1, 2, 3})).empty());
  CHECK(is_frozen(tri, make_coloring(3, {1, 2, 3})));
}

TEST_CASE("K4 with four colors is frozen") {
  PlaneGraph k4 = generate_named("k4");
  Coloring c = make_coloring(4, {1, 2, 3, 4});
  CHECK(reconfig_moves(k4, c).empty());
  CHECK(is_frozen(k4, c));
  Coloring c5 = make_coloring(5, {1, 2, 3, 4});
  CHECK(reconfig_moves(k4, c5).size() == 4);
  CHECK_FALSE(is_frozen(k4, c5));
}

TEST_CASE("antipodal 6-coloring of the icosahedron is frozen") {
  PlaneGraph ico = generate_named("icosahedron");
  Coloring c = icosahedron_antipodal_coloring();
  CHECK(reconfig_moves(ico, c).empty());
  CHECK(is_frozen(ico, c));
  // with a seventh color available it thaws
  Coloring c7 = c;
  c7.k = 7;
  CHECK_FALSE(is_frozen(ico, c7));
  CHECK(reconfig_moves(ico, c7).size() == 12);
}

TEST_CASE("moves are symmetric: every move can be undone") {
  PlaneGraph g = generate_random_triangulation(12, 4);
  Coloring c = random_proper_coloring(g, 6, 11);
  for (const auto& m : reconfig_moves(g, c)) {
    Coloring d = c;
    int old = d.colors[m.vertex];
    d.colors[m.vertex] = m.color;
    REQUIRE(is_proper(g, d));
    auto back = reconfig_moves(g, d);
    RecolorStep inverse{m.vertex, old};
    CHECK(std::find(back.begin(), back.end(), inverse) != back.end());
  }
}

TEST_CASE("check_step enforces one-step legality") {
  PlaneGraph tri = make_cycle(3);
  Coloring c = make_coloring(4, {1, 2, 3});
  CHECK(check_step(tri, c, {0, 4}).empty());
  CHECK_FALSE(check_step(tri, c, {0, 2}).empty());   // conflict with neighbor
  CHECK_FALSE(check_step(tri, c, {0, 1}).empty());   // no-op recolor
  CHECK_FALSE(check_step(tri, c, {0, 5}).empty());   // color out of range
  CHECK_FALSE(check_step(tri, c, {3, 4}).empty());   // vertex out of range
}

TEST_CASE("verify_valid_sequence accepts a clean solver-style run") {
  Scene s;
  s.graph = make_cycle(3);
  s.alpha = make_coloring(10, {1, 2, 10});
  // vertex 2 leaves color 10; vertex 0 takes a detour through 10
  RecolorSequence seq{{2, 3}, {0, 10}, {0, 4}};
  auto rep = verify_valid_sequence(s, seq);
  CHECK(rep.valid);
  CHECK(rep.error.empty());
  CHECK(rep.length == 3);
  CHECK(rep.final.colors == std::vector<int>{4, 2, 3});
  CHECK(rep.recolor_counts == std::vector<int>{2, 0, 1});
}

TEST_CASE("verify_valid_sequence rejects rule violations") {
  Scene s;
  s.graph = make_cycle(3);
  s.alpha = make_coloring(10, {1, 2, 10});

  SUBCASE("final coloring must avoid color 10") {
    auto rep = verify_valid_sequence(s, {});
    CHECK_FALSE(rep.valid);
    CHECK(rep.error_step == -1);
  }
  SUBCASE("a vertex may be recolored at most twice") {
    auto rep = verify_valid_sequence(s, {{2, 3}, {0, 10}, {0, 4}, {0, 5}});
    CHECK_FALSE(rep.valid);
  }
  SUBCASE("a twice-recolored vertex must pass through 10 first") {
    auto rep = verify_valid_sequence(s, {{2, 3}, {0, 4}, {0, 5}});
    CHECK_FALSE(rep.valid);
  }
  SUBCASE("illegal steps are caught with their index") {
    auto rep = verify_valid_sequence(s, {{2, 2}});
    CHECK_FALSE(rep.valid);
    CHECK(rep.error_step == 0);
  }
  SUBCASE("start coloring must be proper") {
    Scene bad = s;
    bad.alpha.colors = {1, 1, 2};
    auto rep = verify_valid_sequence(bad, {{1, 3}});
    CHECK_FALSE(rep.valid);
  }
}

TEST_CASE("check_recoloring_path replays a path to its target") {
  PlaneGraph tri = make_cycle(3);
  Coloring from = make_coloring(4, {1, 2, 3});
  Coloring to = make_coloring(4, {4, 2, 3});
  CHECK(check_recoloring_path(tri, from, {{0, 4}}, to).empty());
  CHECK_FALSE(check_recoloring_path(tri, from, {}, to).empty());
  CHECK_FALSE(check_recoloring_path(tri, from, {{0, 2}}, to).empty());
  // replay must land exactly on the target
  Coloring other = make_coloring(4, {4, 2, 1});
  CHECK_FALSE(check_recoloring_path(tri, from, {{0, 4}}, other).empty());
}

TEST_CASE("explore: triangle with three colors is six isolated states") {
  ExploreReport rep = explore(make_cycle(3), 3);
  CHECK(rep.states == 6);
  CHECK(rep.frozen == 6);
  CHECK(rep.orbits == 1);
  CHECK_FALSE(rep.connected);
  CHECK(rep.component_sizes.size() == 6);
  CHECK(rep.diameter == 0);
}

TEST_CASE("explore: K4 with ten colors") {
  ExploreReport rep = explore(generate_named("k4"), 10);
  CHECK(rep.states == 5040);  // falling factorial 10*9*8*7
  CHECK(rep.connected);
  CHECK(rep.frozen == 0);
  CHECK(rep.diameter == 6);
}

TEST_CASE("explore respects its state budget") {
  ExploreReport rep = explore(generate_named("k4"), 10, 100);
  CHECK(rep.budget_exceeded);
  CHECK(rep.states >= 100);
  CHECK(rep.diameter == -1);
}

TEST_CASE("coloring files round-trip") {
  Coloring c = make_coloring(10, {1, 2, 10, 4});
  std::string text = format_coloring(c);
  Coloring back = parse_coloring(text);
  CHECK(back == c);
  CHECK_THROWS_AS(parse_coloring("not a coloring"), ParseError);
}

TEST_CASE("sequence files round-trip") {
  RecolorSequence seq{{2, 3}, {0, 10}, {0, 4}};
  RecolorSequence back = parse_sequence(format_sequence(seq));
  CHECK(back == seq);
  CHECK(parse_sequence("").empty());
  CHECK_THROWS_AS(parse_sequence("recolor x -> 3"), ParseError);
}

TEST_CASE("random_proper_coloring is proper, in range, deterministic") {
  for (uint64_t seed : {0ull, 1ull, 2ull}) {
    PlaneGraph g = generate_random_triangulation(40, seed + 10);
    Coloring c = random_proper_coloring(g, 10, seed);
    CHECK(c.k == 10);
    CHECK(is_proper(g, c));
    Coloring again = random_proper_coloring(g, 10, seed);
    CHECK(again == c);
  }
  // a planar triangulation is 5-degenerate, so 6 colors always suffice
  PlaneGraph g = generate_random_triangulation(60, 3);
  CHECK(is_proper(g, random_proper_coloring(g, 6, 0)));
  CHECK_THROWS_AS(random_proper_coloring(g, 0, 0), ColoringError);
}
