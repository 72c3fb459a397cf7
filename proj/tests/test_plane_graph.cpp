#include <doctest.h>

#include <algorithm>
#include <set>

#include "rcp/embed/generate.hpp"
#include "rcp/embed/plane_graph.hpp"
#include "rcp/util/text.hpp"
#include "test_helpers.hpp"

using namespace rcp;
using namespace rcp::testing;

namespace {

const char* kK4File =
    "# complete graph on four vertices\n"
    "4\n"
    "0: 1 2 3\n"
    "1: 0 3 2\n"
    "2: 0 1 3\n"
    "3: 0 2 1\n";

}  // namespace

TEST_CASE("parsing a K4 file yields n=4, m=6, F=4") {
  PlaneGraph g = parse_plane_graph(kK4File);
  validate(g);
  CHECK(g.n == 4);
  CHECK(g.edge_count() == 6);
  CHECK(faces(g).size() == 4);
}

TEST_CASE("octahedron satisfies Euler with all faces triangular") {
  PlaneGraph g = generate_named("octahedron");
  CHECK(g.n == 6);
  CHECK(g.edge_count() == 12);
  auto fs = faces(g);
  CHECK(fs.size() == 8);
  for (const auto& f : fs) CHECK(f.size() == 3);
}

TEST_CASE("parser rejects malformed files") {
  CHECK_THROWS_AS(parse_plane_graph(""), ParseError);
  CHECK_THROWS_AS(parse_plane_graph("2\n0: x\n1: 0\n"), ParseError);
  CHECK_THROWS_AS(parse_plane_graph("2\n0: 1\n"), ParseError);
  // repeated neighbor and asymmetric adjacency are structural errors
  CHECK_THROWS_AS(parse_plane_graph("2\n0: 1 1\n1: 0 0\n"), GraphError);
  CHECK_THROWS_AS(parse_plane_graph("2\n0: 1\n1:\n"), GraphError);
  // a declared outer triple must be a traced face
  PlaneGraph k4 = parse_plane_graph(kK4File);
  std::string text = format_plane_graph(k4) + "outer: 0 1 2\n";
  bool ok = true;
  try {
    parse_plane_graph(text);
  } catch (const GraphError&) {
    ok = false;
  } catch (const ParseError&) {
    ok = false;
  }
  std::string good = format_plane_graph(k4) + "outer: 0 2 1\n";
  bool ok2 = true;
  try {
    parse_plane_graph(good);
  } catch (const std::exception&) {
    ok2 = false;
  }
  // exactly one of the two orientations of {0,1,2} is a traced face
  CHECK(ok != ok2);
}

TEST_CASE("face tracing covers each directed edge once") {
  for (const char* name : {"k4", "octahedron", "icosahedron"}) {
    PlaneGraph g = generate_named(name);
    std::set<std::pair<int, int>> seen;
    size_t total = 0;
    for (const auto& f : faces(g)) {
      total += f.size();
      for (size_t i = 0; i < f.size(); ++i) {
        auto arc = std::make_pair(f[i], f[(i + 1) % f.size()]);
        CHECK(seen.insert(arc).second);
      }
    }
    CHECK(total == 2 * static_cast<size_t>(g.edge_count()));
  }
}

TEST_CASE("triangulation report classifies the named solids") {
  auto ico = validate_triangulation(generate_named("icosahedron"));
  CHECK(ico.is_triangulation);
  CHECK(ico.min_degree == 5);
  auto oct = validate_triangulation(generate_named("octahedron"));
  CHECK(oct.is_triangulation);
  CHECK(oct.min_degree == 4);
  auto cyc = validate_triangulation(make_cycle(4));
  CHECK_FALSE(cyc.is_triangulation);
}

TEST_CASE("wheels read the rotation and have closed rims on triangulations") {
  PlaneGraph ico = generate_named("icosahedron");
  for (int v = 0; v < ico.n; ++v) {
    Wheel w = wheel_of(ico, v);
    CHECK(w.rim.size() == 5);
    CHECK(wheel_rim_closed(ico, w));
  }
  PlaneGraph oct = generate_named("octahedron");
  CHECK(wheel_of(oct, 0).rim.size() == 4);
  PlaneGraph k4 = parse_plane_graph(kK4File);
  Wheel w = wheel_of(k4, 0);
  REQUIRE(w.rim.size() == 3);
  std::vector<int> rim = w.rim;
  std::sort(rim.begin(), rim.end());
  CHECK(rim == std::vector<int>{1, 2, 3});
}

TEST_CASE("separating triangles: none in the solids, one after a face split") {
  CHECK(separating_triangles(generate_named("icosahedron")).empty());
  CHECK(separating_triangles(generate_named("octahedron")).empty());

  PlaneGraph ico = generate_named("icosahedron");
  REQUIRE(ico.outer.has_value());
  // split an inner face so its triangle becomes separating with one
  // interior vertex
  Face inner;
  for (const auto& f : faces(ico)) {
    std::array<int, 3> cand{f[0], f[1], f[2]}, outer = *ico.outer;
    std::sort(cand.begin(), cand.end());
    std::sort(outer.begin(), outer.end());
    if (cand != outer) {
      inner = f;
      break;
    }
  }
  PlaneGraph split = subdivide_face(ico, inner);
  auto seps = separating_triangles(split);
  REQUIRE(seps.size() == 1);
  CHECK(seps[0].interior == std::vector<int>{12});
  std::array<int, 3> tri{inner[0], inner[1], inner[2]};
  std::sort(tri.begin(), tri.end());
  CHECK(seps[0].tri == tri);
}

TEST_CASE("separating triangles are sorted innermost first") {
  PlaneGraph ico = generate_named("icosahedron");
  Face inner;
  for (const auto& f : faces(ico)) {
    std::array<int, 3> cand{f[0], f[1], f[2]}, outer = *ico.outer;
    std::sort(cand.begin(), cand.end());
    std::sort(outer.begin(), outer.end());
    if (cand != outer) {
      inner = f;
      break;
    }
  }
  // split, then split one of the three new faces again: interiors nest
  PlaneGraph once = subdivide_face(ico, inner);
  Face sub;
  for (const auto& f : faces(once))
    if (std::find(f.begin(), f.end(), 12) != f.end()) {
      sub = f;
      break;
    }
  PlaneGraph twice = subdivide_face(once, sub);
  auto seps = separating_triangles(twice);
  REQUIRE(seps.size() >= 2);
  for (size_t i = 1; i < seps.size(); ++i)
    CHECK(seps[i - 1].interior.size() <= seps[i].interior.size());
  CHECK(seps[0].interior.size() == 1);
}

TEST_CASE("adding a chord splits a face") {
  PlaneGraph c4 = make_cycle(4);
  Face f = faces(c4)[0];
  PlaneGraph with = surgery_add_edge(c4, f, 0, 2);
  validate(with);
  CHECK(with.edge_count() == 5);
  CHECK(face_lengths(with) == std::vector<size_t>{3, 3, 4});

  PlaneGraph c5 = make_cycle(5);
  PlaneGraph penta = surgery_add_edge(c5, faces(c5)[0], 0, 2);
  CHECK(face_lengths(penta) == std::vector<size_t>{3, 4, 5});

  // adjacent endpoints are rejected
  CHECK_THROWS_AS(surgery_add_edge(c4, faces(c4)[0], 0, 1), GraphError);
}

TEST_CASE("face count grows by one per inserted chord") {
  PlaneGraph c6 = make_cycle(6);
  size_t before = faces(c6).size();
  PlaneGraph after = surgery_add_edge(c6, faces(c6)[0], 0, 3);
  CHECK(faces(after).size() == before + 1);
}

TEST_CASE("identifying across a face merges vertices and stays planar") {
  PlaneGraph c4 = make_cycle(4);
  auto res = surgery_identify(c4, faces(c4)[0], 0, 2);
  validate(res.graph);
  CHECK(res.graph.n == 3);
  CHECK(res.graph.edge_count() == 2);  // parallel edges collapsed
  CHECK(res.vertex_map[0] == res.vertex_map[2]);

  PlaneGraph c6 = make_cycle(6);
  auto antip = surgery_identify(c6, faces(c6)[0], 0, 3);
  validate(antip.graph);
  CHECK(antip.graph.n == 5);

  PlaneGraph c5 = make_cycle(5);
  auto dist2 = surgery_identify(c5, faces(c5)[0], 0, 2);
  validate(dist2.graph);
  CHECK(dist2.graph.n == 4);
  CHECK(has_face_of_length(dist2.graph, 3));

  CHECK_THROWS_AS(surgery_identify(c4, faces(c4)[0], 0, 1), GraphError);
}

TEST_CASE("induced subgraphs, edge deletion, components") {
  PlaneGraph ico = generate_named("icosahedron");
  auto sub = induced_subgraph(ico, {0, 1, 2, 3});
  CHECK(sub.graph.n == 4);
  CHECK(sub.old_ids == std::vector<int>{0, 1, 2, 3});
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      CHECK(sub.graph.has_edge(a, b) == ico.has_edge(a, b));

  int u = 0, v = ico.rot[0][0];
  PlaneGraph del = delete_edge(ico, u, v);
  validate(del);
  CHECK(del.edge_count() == 29);
  CHECK_THROWS_AS(delete_edge(del, u, v), GraphError);

  PlaneGraph two = make_edgeless(6);
  for (int base : {0, 3}) {
    two.rot[base] = {base + 1, base + 2};
    two.rot[base + 1] = {base + 2, base};
    two.rot[base + 2] = {base, base + 1};
  }
  validate(two);
  auto comps = components(two);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<int>{0, 1, 2});
  CHECK(comps[1] == std::vector<int>{3, 4, 5});
}

TEST_CASE("graph files round-trip bit-exactly") {
  for (const char* name : {"k4", "octahedron", "icosahedron"}) {
    PlaneGraph g = generate_named(name);
    std::string text = format_plane_graph(g);
    CHECK(format_plane_graph(parse_plane_graph(text)) == text);
  }
}
