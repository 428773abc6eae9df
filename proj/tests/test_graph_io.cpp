#include <random>
#include <sstream>

#include "doctest.h"
#include "hypograph/graph.hpp"
#include "hypograph/graph_io.hpp"
#include "json.hpp"

using namespace hypograph;

TEST_CASE("graph JSON round trip") {
  SimpleGraph g = make_graph(4, {{2, 1}, {0, 1}, {3, 2}}, {"a1", "a2", "a3", "a4"});
  SimpleGraph back = graph_from_json(graph_to_json(g));
  CHECK(back == g);

  auto parsed = nlohmann::json::parse(graph_to_json(g));
  // Writer emits u < v sorted pairs.
  CHECK(parsed["edges"][0] == nlohmann::json::array({0, 1}));
  CHECK(parsed["edges"][1] == nlohmann::json::array({1, 2}));
  CHECK(parsed["edges"][2] == nlohmann::json::array({2, 3}));

  CHECK_THROWS_AS(graph_from_json("{\"edges\": []}"), GraphError);
  CHECK_THROWS_AS(graph_from_json("not json"), GraphError);
  CHECK_THROWS_AS(graph_from_json("{\"n\": 3, \"edges\": [[0,0]]}"), GraphError);

  SUBCASE("random graphs survive the round trip") {
    std::mt19937 rng(7);
    for (int round = 0; round < 30; ++round) {
      int n = 1 + static_cast<int>(rng() % 9);
      std::vector<std::pair<int, int>> edges;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (rng() % 2) edges.emplace_back(u, v);
      SimpleGraph sample = make_graph(n, edges);
      CHECK(graph_from_json(graph_to_json(sample)) == sample);
    }
  }
}

TEST_CASE("graph6 encoding") {
  // K3 is "Bw" in the standard encoding.
  SimpleGraph k3 = make_graph(3, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(graph_to_graph6(k3) == "Bw");
  CHECK(graph_from_graph6("Bw") == k3);

  CHECK(graph_from_graph6(">>graph6<<Bw") == k3);

  SUBCASE("round trip over random graphs") {
    std::mt19937 rng(11);
    for (int round = 0; round < 30; ++round) {
      int n = 1 + static_cast<int>(rng() % 12);
      std::vector<std::pair<int, int>> edges;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (rng() % 3 == 0) edges.emplace_back(u, v);
      SimpleGraph sample = make_graph(n, edges);
      CHECK(graph_from_graph6(graph_to_graph6(sample)) == sample);
    }
  }

  SUBCASE("multi-line reader") {
    std::istringstream in("Bw\nBo\n");
    auto graphs = read_graph6(in);
    REQUIRE(graphs.size() == 2);
    CHECK(graphs[0].edge_count() == 3);
    // "Bo" packs bits 110000: the path with edges {0,1} and {0,2}.
    CHECK(graphs[1].edge_count() == 2);
    CHECK(graphs[1].degree(0) == 2);
  }

  CHECK_THROWS_AS(graph_from_graph6(""), GraphError);
  CHECK_THROWS_AS(graph_from_graph6("B"), GraphError);
}

TEST_CASE("DOT writer is stable") {
  SimpleGraph p3 = make_graph(3, {{1, 2}, {0, 1}});
  CHECK(graph_to_dot(p3) ==
        "graph G {\n"
        "  n0 [label=\"v1\"];\n"
        "  n1 [label=\"v2\"];\n"
        "  n2 [label=\"v3\"];\n"
        "  n0 -- n1;\n"
        "  n1 -- n2;\n"
        "}\n");
}
