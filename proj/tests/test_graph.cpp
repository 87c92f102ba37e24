#include <doctest.h>

#include "fixtures.hpp"
#include "netgame/graph.hpp"

using namespace netgame;

TEST_CASE("edge list parses the complete graph on four nodes") {
  Graph g = parse_edge_list("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3");
  CHECK(g.node_count() == 4);
  CHECK(g.edge_count() == 6);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) CHECK(g.has_edge(u, v));
}

TEST_CASE("edge list accepts a single isolated node") {
  Graph g = parse_edge_list("1 0");
  CHECK(g.node_count() == 1);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("edge list accepts comments and blank lines") {
  Graph g = parse_edge_list("# a path\n\n3 2\n0 1  # first\n1 2\n\n# trailing comment\n");
  CHECK(g.node_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));
}

TEST_CASE("edge list rejects each malformation with its own diagnostic") {
  CHECK_THROWS_WITH_AS(parse_edge_list("3 2\n0 1\n1 1"),
                       doctest::Contains("self-loop"), GraphParseError);
  CHECK_THROWS_WITH_AS(parse_edge_list("3 2\n0 1\n0 1"),
                       doctest::Contains("duplicate edge"), GraphParseError);
  CHECK_THROWS_WITH_AS(parse_edge_list("3 2\n0 1\n1 3"),
                       doctest::Contains("out of range"), GraphParseError);
  CHECK_THROWS_WITH_AS(parse_edge_list("3 1\n0 1 2"),
                       doctest::Contains("malformed edge line"), GraphParseError);
  CHECK_THROWS_WITH_AS(parse_edge_list("3 2\n0 one"),
                       doctest::Contains("malformed edge line"), GraphParseError);
  CHECK_THROWS_WITH_AS(parse_edge_list("3 2\n0 1"), doctest::Contains("expected 2 edges"),
                       GraphParseError);
  CHECK_THROWS_WITH_AS(parse_edge_list("2 1\n0 1\n0 1"),
                       doctest::Contains("unexpected content"), GraphParseError);
  CHECK_THROWS_WITH_AS(parse_edge_list(""), doctest::Contains("empty document"), GraphParseError);
  CHECK_THROWS_WITH_AS(parse_edge_list("x y"), doctest::Contains("malformed header"),
                       GraphParseError);
}

TEST_CASE("edge list normalizes reversed endpoints") {
  Graph g = parse_edge_list("3 2\n1 0\n2 1");
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n1 0"), GraphParseError);  // same edge twice
}

TEST_CASE("json graph form round-trips nodes, edges and weights") {
  auto doc = parse_graph_json(R"({"n": 3, "edges": [[0,1],[1,2]], "weights": [1.0, 5.0, 1.0]})");
  CHECK(doc.graph.node_count() == 3);
  CHECK(doc.graph.has_edge(0, 1));
  REQUIRE(doc.weights.has_value());
  CHECK((*doc.weights)[1] == 5.0);
  CHECK_THROWS_AS(parse_graph_json(R"({"n": 2, "edges": [[0,0]]})"), GraphParseError);
  CHECK_THROWS_AS(parse_graph_json(R"({"n": 2, "weights": [1.0]})"), GraphParseError);
  CHECK_THROWS_AS(parse_graph_json("{"), GraphParseError);
}

TEST_CASE("adjacency view stays consistent with the edge set") {
  Graph g = fixtures::fig2_ten();
  int degree_total = 0;
  for (int v = 0; v < g.node_count(); ++v) {
    degree_total += g.degree(v);
    for (int w : g.neighbors(v)) {
      CHECK(g.has_edge(v, w));
      CHECK(g.has_edge(w, v));
    }
  }
  CHECK(degree_total == 2 * g.edge_count());
}

TEST_CASE("graph constructor enforces the invariants") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
}

TEST_CASE("connected components partition the graph") {
  SUBCASE("a connected graph is one component") {
    auto comps = connected_components(fixtures::p7());
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].graph.node_count() == 7);
    CHECK(comps[0].graph.edge_count() == 6);
  }
  SUBCASE("two disjoint edges are two K2 components") {
    Graph g(4, {{0, 1}, {2, 3}});
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 2);
    for (const auto& c : comps) {
      CHECK(c.graph.node_count() == 2);
      CHECK(c.graph.edge_count() == 1);
    }
    CHECK(comps[0].original_nodes == std::vector<int>{0, 1});
    CHECK(comps[1].original_nodes == std::vector<int>{2, 3});
  }
  SUBCASE("removing the middle of a path splits it") {
    Graph g = fixtures::p7().induced(NodeSet{0, 1, 2, 4, 5, 6});
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].graph.node_count() == 3);
    CHECK(comps[1].graph.node_count() == 3);
    CHECK(comps[0].graph.edge_count() == 2);
  }
}

TEST_CASE("complement exchanges edges and non-edges") {
  Graph g = fixtures::path(4);
  Graph c = g.complement();
  CHECK(c.edge_count() == 4 * 3 / 2 - 3);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) CHECK(g.has_edge(u, v) != c.has_edge(u, v));
}
