#include <doctest.h>

#include "oracles.hpp"
#include "pgq/error.hpp"
#include "pgq/grassmann.hpp"
#include "pgq/maps.hpp"
#include "pgq/projspace.hpp"
#include "pgq/rng.hpp"
#include "pgq/theorems.hpp"

using namespace pgq;

namespace {

bool lines_meet(const ProjSpace& sp, int a, int b) {
  auto pa = sp.line_points(a), pb = sp.line_points(b);
  for (int x : pa)
    if (std::find(pb.begin(), pb.end(), x) != pb.end()) return true;
  return false;
}

Graph petersen() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  for (auto& [u, v] : e)
    if (u > v) std::swap(u, v);
  return Graph::from_edges(10, e);
}

}  // namespace

TEST_CASE("Grassmann graphs of small spaces") {
  const ProjSpace sp(3, 2);
  const auto g = build_grassmann(sp);
  CHECK(g.graph().order() == 35);
  CHECK(g.graph().edge_count() == 315);
  for (int v = 0; v < 35; ++v) CHECK(g.graph().degree(v) == 18);

  const ProjSpace fano(2, 2);
  const auto k7 = build_grassmann(fano);
  CHECK(k7.graph().edge_count() == 21);

  const ProjSpace big(4, 2);
  const auto g4 = build_grassmann(big);
  CHECK(g4.graph().order() == 155);
  for (int v = 0; v < 155; ++v) CHECK(g4.graph().degree(v) == 42);
}

TEST_CASE("adjacency is exactly line intersection") {
  for (int q : {2, 3}) {
    const ProjSpace sp(3, q);
    const auto g = build_grassmann(sp);
    for (int a = 0; a < sp.line_count(); ++a)
      for (int b = 0; b < sp.line_count(); ++b) {
        const bool meet = lines_meet(sp, a, b);
        CHECK(g.graph().adjacent(a, b) == (a != b && meet));
        CHECK(related(g, a, b) == meet);
        CHECK(related(g, a, b) == related(g, b, a));
        if (a != b) CHECK(skew(g, a, b) != related(g, a, b));
      }
    for (int a = 0; a < sp.line_count(); ++a) {
      CHECK(related(g, a, a));
      CHECK_FALSE(skew(g, a, a));
    }
  }
}

TEST_CASE("skew counts") {
  const ProjSpace sp(3, 2);
  const auto g = build_grassmann(sp);
  for (int a = 0; a < 35; ++a) {
    int s = 0;
    for (int b = 0; b < 35; ++b) s += skew(g, a, b);
    CHECK(s == 16);
  }
  for (int q : {2, 3}) {
    const ProjSpace plane(2, q);
    const auto gp = build_grassmann(plane);
    for (int a = 0; a < plane.line_count(); ++a)
      for (int b = 0; b < plane.line_count(); ++b) CHECK_FALSE(skew(gp, a, b));
  }
}

TEST_CASE("degree matches the closed form up to 200 lines") {
  for (int n = 2; n <= 4; ++n)
    for (int q : supported_orders()) {
      if (gaussian_binomial(n + 1, 2, q) > 200) continue;
      CAPTURE(n);
      CAPTURE(q);
      const ProjSpace sp(n, q);
      const auto g = build_grassmann(sp);
      for (int v = 0; v < g.graph().order(); ++v)
        REQUIRE(g.graph().degree(v) == grassmann_degree(n, q));
    }
  CHECK(grassmann_degree(3, 2) == 18);
  CHECK(grassmann_degree(4, 2) == 42);
}

TEST_CASE("graph export and parse") {
  const ProjSpace sp(3, 2);
  const auto g = build_grassmann(sp);
  const std::string text = export_graph(g);
  CHECK(text.rfind("GRAPH 35 315\n", 0) == 0);
  const Graph back = parse_graph(text);
  CHECK(back.adjacency() == g.graph().adjacency());
  CHECK(export_graph(back) == text);

  const Graph empty = Graph::from_edges(4, {});
  CHECK(export_graph(empty) == "GRAPH 4 0\n");
  CHECK(parse_graph("GRAPH 4 0\n").order() == 4);

  auto line_of = [](const std::string& bad) {
    try {
      parse_graph(bad);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("GRAPH 3 1\n0 1") == 2);
  CHECK(line_of("GRAPH 3 2\n0 1\n") == 3);
  CHECK(line_of("GRAPH 3 2\n0 2\n0 1\n") == 3);
  CHECK(line_of("GRAPH 3 1\n1 1\n") == 2);
  CHECK(line_of("GRAPH 3 1\n0 3\n") == 2);
  CHECK(line_of("GRAF 3 1\n0 1\n") == 1);
  CHECK(line_of("GRAPH 3 1\n0  1\n") == 2);
  CHECK(line_of("GRAPH 3 1\n0 1\nextra\n") == 3);
  CHECK(line_of("GRAPH 3 -1\n") == 1);
}

TEST_CASE("automorphism group orders") {
  SUBCASE("PG(3,2)") {
    const ProjSpace sp(3, 2);
    const auto rep = automorphism_group(build_grassmann(sp), 1'000'000);
    CHECK(rep.group_order == 40320);
    CHECK(rep.group_order == 2 * pgl_order(3, 2));
    BigInt product = 1;
    for (int len : rep.orbit_lengths) product *= len;
    CHECK(product == rep.group_order);
    CHECK(oracle::group_closure_size(rep.generators, 35) == 40320);
  }
  SUBCASE("PG(2,2) gives K7") {
    const auto rep = automorphism_group(build_grassmann(ProjSpace(2, 2)), 1'000'000);
    CHECK(rep.group_order == 5040);
    CHECK(oracle::group_closure_size(rep.generators, 7) == 5040);
  }
  SUBCASE("single vertex") {
    const auto rep = automorphism_group(Graph::from_edges(1, {}), 10);
    CHECK(rep.group_order == 1);
  }
  SUBCASE("small graphs against brute force") {
    const Graph p = petersen();
    CHECK(automorphism_group(p, 100'000).group_order == 120);
    CHECK(oracle::brute_force_automorphisms(p) == 120);
    std::vector<Graph> graphs{
        Graph::from_edges(3, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}}),
        Graph::from_edges(5, {}),
        Graph::from_edges(6, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 0}, {3, 4}}),
        Graph::from_edges(6, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}}),
        Graph::from_edges(7, std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}}),
    };
    SplitMix64 rng(99);
    for (int t = 0; t < 20; ++t) {
      std::vector<std::pair<int, int>> e;
      for (int u = 0; u < 8; ++u)
        for (int v = u + 1; v < 8; ++v)
          if (rng.below(3) == 0) e.emplace_back(u, v);
      graphs.push_back(Graph::from_edges(8, e));
    }
    for (const auto& g : graphs) {
      const auto rep = automorphism_group(g, 1'000'000);
      CHECK(rep.group_order == BigInt(oracle::brute_force_automorphisms(g)));
      CHECK(oracle::group_closure_size(rep.generators, g.order()) == rep.group_order);
    }
  }
}

TEST_CASE("automorphism search guards") {
  CHECK_THROWS_AS(automorphism_group(build_grassmann(ProjSpace(3, 4)), 1'000'000), TooLarge);
  CHECK_THROWS_AS(automorphism_group(build_grassmann(ProjSpace(3, 2)), 2), BudgetExceeded);
}

TEST_CASE("automorphism reports are deterministic") {
  const ProjSpace sp(3, 2);
  const auto a = automorphism_group(build_grassmann(sp), 1'000'000);
  const auto b = automorphism_group(build_grassmann(sp), 1'000'000);
  CHECK(a.generators == b.generators);
  CHECK(a.base == b.base);
  CHECK(a.orbit_lengths == b.orbit_lengths);
  CHECK(a.nodes == b.nodes);
}

TEST_CASE("collineations induce graph automorphisms") {
  for (int q : {2, 3}) {
    const ProjSpace sp(3, q);
    const auto g = build_grassmann(sp);
    SplitMix64 rng(1234 + q);
    for (int t = 0; t < 100; ++t) {
      const auto lm = induced_line_map(collineation_point_map(random_collineation(rng, sp), sp, sp));
      bool ok = true;
      for (int a = 0; a < sp.line_count() && ok; ++a)
        for (int b = a + 1; b < sp.line_count() && ok; ++b)
          ok = g.graph().adjacent(a, b) == g.graph().adjacent(lm.image[a], lm.image[b]);
      CHECK(ok);
    }
  }
}
