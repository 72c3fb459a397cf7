#include <doctest.h>

#include <algorithm>

#include "rcp/embed/generate.hpp"
#include "rcp/embed/plane_graph.hpp"
#include "test_helpers.hpp"

using namespace rcp;

TEST_CASE("named solids have the textbook sizes") {
  PlaneGraph k4 = generate_named("k4");
  CHECK(k4.n == 4);
  CHECK(k4.edge_count() == 6);
  CHECK(validate_triangulation(k4).is_triangulation);

  PlaneGraph oct = generate_named("octahedron");
  CHECK(oct.n == 6);
  CHECK(oct.edge_count() == 12);
  auto octr = validate_triangulation(oct);
  CHECK(octr.is_triangulation);
  CHECK(octr.min_degree == 4);
  for (int d : octr.degrees) CHECK(d == 4);

  PlaneGraph ico = generate_named("icosahedron");
  CHECK(ico.n == 12);
  CHECK(ico.edge_count() == 30);
  auto icor = validate_triangulation(ico);
  CHECK(icor.is_triangulation);
  for (int d : icor.degrees) CHECK(d == 5);

  CHECK_THROWS_AS(generate_named("dodecahedron"), GraphError);
}

TEST_CASE("icosahedron antipodes are at distance three") {
  PlaneGraph ico = generate_named("icosahedron");
  for (int v = 0; v < 12; ++v) {
    int a = icosahedron_antipode(v);
    CHECK(a == 11 - v);
    CHECK_FALSE(ico.has_edge(v, a));
    // no common neighbor either
    for (int w : ico.rot[v]) CHECK_FALSE(ico.has_edge(w, a));
  }
}

TEST_CASE("random triangulations validate across sizes and seeds") {
  for (int n : {4, 5, 12, 50}) {
    for (uint64_t seed : {1ull, 7ull, 99ull}) {
      PlaneGraph g = generate_random_triangulation(n, seed);
      CHECK(g.n == n);
      auto rep = validate_triangulation(g);
      CHECK(rep.is_triangulation);
      CHECK(g.edge_count() == 3 * n - 6);
    }
  }
  CHECK_THROWS_AS(generate_random_triangulation(3, 1), GraphError);
}

TEST_CASE("random triangulations are deterministic per seed") {
  PlaneGraph a = generate_random_triangulation(40, 5);
  PlaneGraph b = generate_random_triangulation(40, 5);
  CHECK(format_plane_graph(a) == format_plane_graph(b));
  PlaneGraph c = generate_random_triangulation(40, 6);
  CHECK(format_plane_graph(a) != format_plane_graph(c));
}

TEST_CASE("flip count of zero still yields a valid triangulation") {
  PlaneGraph g = generate_random_triangulation(30, 3, 0);
  CHECK(validate_triangulation(g).is_triangulation);
}

TEST_CASE("min-degree-5 generator keeps inner degrees at five or more") {
  for (uint64_t seed : {1ull, 2ull, 3ull}) {
    PlaneGraph g = generate_random_mindeg5(30, seed);
    CHECK(g.n == 30);
    CHECK(validate_triangulation(g).is_triangulation);
    REQUIRE(g.outer.has_value());
    const auto& t = *g.outer;
    for (int v = 0; v < g.n; ++v) {
      bool on_outer = v == t[0] || v == t[1] || v == t[2];
      if (!on_outer) CHECK(g.degree(v) >= 5);
    }
  }
  CHECK_THROWS_AS(generate_random_mindeg5(11, 1), GraphError);
}

TEST_CASE("min-degree-5 generator is deterministic per seed") {
  PlaneGraph a = generate_random_mindeg5(25, 9);
  PlaneGraph b = generate_random_mindeg5(25, 9);
  CHECK(format_plane_graph(a) == format_plane_graph(b));
}
