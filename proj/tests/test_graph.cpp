#include <catch2/catch_amalgamated.hpp>

#include "common.hpp"
#include "ucsat/families.hpp"
#include "ucsat/graph.hpp"

using ucsat::Graph;

TEST_CASE("graph construction bounds") {
  CHECK_THROWS_AS(Graph(0), std::invalid_argument);
  CHECK_THROWS_AS(Graph(65), std::invalid_argument);
  CHECK_NOTHROW(Graph(1));
  CHECK_NOTHROW(Graph(64));
}

TEST_CASE("edges and degrees") {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK(g.degree(1) == 2);
  CHECK(g.edge_count() == 2);
  g.remove_edge(0, 1);
  CHECK_FALSE(g.has_edge(0, 1));
  CHECK(g.edge_count() == 1);
  CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 4), std::out_of_range);
}

TEST_CASE("complete and neighbors") {
  Graph k4 = ucsat::complete_graph(4);
  CHECK(k4.is_complete());
  CHECK(k4.neighbors(0) == 0b1110);
  CHECK(k4.full_mask() == 0b1111);
  Graph p3 = ucsat::path_graph(3);
  CHECK_FALSE(p3.is_complete());
  CHECK(Graph(1).is_complete());
}

TEST_CASE("connectivity") {
  CHECK(ucsat::is_connected(ucsat::path_graph(5)));
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  CHECK_FALSE(ucsat::is_connected(g));
  CHECK(ucsat::is_connected(Graph(1)));
  CHECK_FALSE(ucsat::is_connected(Graph(2)));
}

TEST_CASE("distance and diameter") {
  Graph c6 = ucsat::cycle_graph(6);
  CHECK(ucsat::distance(c6, 0, 3) == 3);
  CHECK(ucsat::distance(c6, 0, 5) == 1);
  CHECK(ucsat::diameter(c6) == 3);
  Graph g(3);
  g.add_edge(0, 1);
  CHECK_FALSE(ucsat::distance(g, 0, 2).has_value());
  CHECK_FALSE(ucsat::diameter(g).has_value());
  CHECK(ucsat::diameter(ucsat::path_graph(4)) == 3);
}

TEST_CASE("two-connectivity") {
  CHECK(ucsat::is_two_connected(ucsat::cycle_graph(4)));
  CHECK(ucsat::is_two_connected(ucsat::complete_graph(3)));
  CHECK_FALSE(ucsat::is_two_connected(ucsat::path_graph(4)));
  CHECK_FALSE(ucsat::is_two_connected(ucsat::friendship_graph(2)));
  CHECK_FALSE(ucsat::is_two_connected(ucsat::complete_graph(2)));
  CHECK_FALSE(ucsat::is_two_connected(ucsat::star_graph(3)));
  CHECK(ucsat::is_two_connected(ucsat::petersen_graph()));
}

TEST_CASE("cut vertex detection matches removal oracle") {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 300; ++iter) {
    int n = 3 + static_cast<int>(rng() % 6);
    ucsat::Graph g = testutil::random_graph(rng, n, 0.35);
    if (!ucsat::is_connected(g)) continue;
    // brute force: any vertex whose removal disconnects the rest
    bool has_cut = false;
    for (int v = 0; v < n && !has_cut; ++v) {
      std::vector<int> rest;
      for (int w = 0; w < n; ++w)
        if (w != v) rest.push_back(w);
      has_cut = !ucsat::is_connected(ucsat::induced_subgraph(g, rest));
    }
    CHECK(ucsat::is_two_connected(g) == (n >= 3 && !has_cut));
  }
}

TEST_CASE("induced subgraph relabels in list order") {
  Graph g = ucsat::cycle_graph(5);
  Graph h = ucsat::induced_subgraph(g, {0, 1, 3});
  CHECK(h.order() == 3);
  CHECK(h.has_edge(0, 1));
  CHECK_FALSE(h.has_edge(0, 2));
  CHECK_FALSE(h.has_edge(1, 2));
}

TEST_CASE("with_vertex appends") {
  Graph p2 = ucsat::path_graph(2);
  Graph g = p2.with_vertex(0b01);
  CHECK(g.order() == 3);
  CHECK(g.has_edge(0, 2));
  CHECK_FALSE(g.has_edge(1, 2));
  CHECK(g.has_edge(0, 1));
  CHECK_THROWS_AS(p2.with_vertex(0b100), std::invalid_argument);
}

TEST_CASE("complement non-edges are lexicographic") {
  Graph g = ucsat::path_graph(4);
  auto nes = ucsat::complement_non_edges(g);
  REQUIRE(nes.size() == 3);
  CHECK(nes[0] == std::make_pair(0, 2));
  CHECK(nes[1] == std::make_pair(0, 3));
  CHECK(nes[2] == std::make_pair(1, 3));
  CHECK(ucsat::complement_non_edges(ucsat::complete_graph(5)).empty());
}

TEST_CASE("family generators") {
  CHECK(ucsat::cycle_graph(3).edge_count() == 3);
  CHECK_THROWS_AS(ucsat::cycle_graph(2), std::invalid_argument);
  CHECK(ucsat::star_graph(4).order() == 5);
  CHECK(ucsat::star_graph(4).degree(0) == 4);
  CHECK(ucsat::friendship_graph(3).order() == 7);
  CHECK(ucsat::friendship_graph(3).edge_count() == 9);
  CHECK(ucsat::petersen_graph().edge_count() == 15);
  for (int v = 0; v < 10; ++v) CHECK(ucsat::petersen_graph().degree(v) == 3);
  ucsat::Graph h24 = ucsat::h_pattern_graph({2, 4});
  CHECK(h24.order() == 8);
  CHECK(h24.edge_count() == 8);
  CHECK(ucsat::h_pattern_graph({3, 0}).edge_count() == 6);
  CHECK_THROWS_AS(ucsat::h_pattern_graph({1, 2}), std::invalid_argument);
}
