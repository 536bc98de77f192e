#include <doctest.h>

#include <random>

#include "proxim/builders.hpp"
#include "proxim/errors.hpp"
#include "proxim/graph.hpp"
#include "proxim/metrics.hpp"

using namespace proxim;

TEST_CASE("graph: edge list construction") {
  const Graph g = Graph::from_edge_list(4, {{0, 1}, {1, 0}, {2, 1}, {2, 3}});
  CHECK(g.order() == 4);
  CHECK(g.edge_count() == 3); // duplicate dropped
  CHECK(g.degree(1) == 2);
  CHECK(g.adjacent(1, 2));
  CHECK_FALSE(g.adjacent(0, 3));
  const auto n1 = g.neighbors(1);
  CHECK(std::vector<VertexId>(n1.begin(), n1.end()) == std::vector<VertexId>{0, 2});
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});

  CHECK(Graph().order() == 1);
  CHECK(Graph::from_edge_list(1, {}).edge_count() == 0);
  CHECK_THROWS_AS(Graph::from_edge_list(0, {}), InvalidArgument);
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 3}}), InvalidArgument);
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{1, 1}}), InvalidArgument);
}

TEST_CASE("graph: basic generators") {
  const Graph p5 = basic_generator(BasicKind::path, 5);
  CHECK(p5.edge_count() == 4);
  CHECK(p5.degree(0) == 1);
  const Graph c5 = basic_generator(BasicKind::cycle, 5);
  CHECK(c5.edge_count() == 5);
  CHECK(c5.adjacent(4, 0));
  CHECK(basic_generator(BasicKind::complete, 6).edge_count() == 15);
  CHECK(basic_generator(BasicKind::edgeless, 3).edge_count() == 0);
  CHECK(basic_generator(BasicKind::path, 1).order() == 1);

  const Graph pet = petersen();
  CHECK(pet.order() == 10);
  CHECK(pet.edge_count() == 15);
  for (VertexId v = 0; v < 10; ++v) CHECK(pet.degree(v) == 3);
}

TEST_CASE("graph: sequential sum") {
  const LayeredGraph lg = sequential_sum(LayerPlan({1, 3, 2}));
  CHECK(lg.graph.order() == 6);
  CHECK(lg.graph.edge_count() == 3 + 6);
  CHECK(lg.layer_of == std::vector<std::size_t>{0, 1, 1, 1, 2, 2});
  CHECK_FALSE(lg.graph.adjacent(1, 2)); // layers are independent
  CHECK(sequential_sum(LayerPlan({1, 3, 2, 1, 1, 3, 2, 1})).graph.edge_count() == 23);
  CHECK(sequential_sum(LayerPlan({1})).graph.order() == 1);
  // K_{2,2}: a 4-cycle 0-2-1-3.
  CHECK(sequential_sum(LayerPlan({2, 2})).graph == Graph::from_edge_list(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
  CHECK_THROWS_AS(LayerPlan({}), InvalidArgument);
  CHECK_THROWS_AS(LayerPlan({1, 0, 2}), InvalidArgument);
}

TEST_CASE("graph: sequential sum distances are layer differences") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t layers = 2 + rng() % 7;
    std::vector<std::size_t> sizes(layers);
    for (auto& s : sizes) s = 1 + rng() % 4;
    const LayeredGraph lg = sequential_sum(LayerPlan(sizes));
    const auto& g = lg.graph;
    for (VertexId v = 0; v < g.order(); ++v) {
      const auto d = bfs_distances(g, v);
      for (VertexId w = 0; w < g.order(); ++w) {
        const auto li = lg.layer_of[v], lj = lg.layer_of[w];
        std::uint32_t expected = li > lj ? li - lj : lj - li;
        if (v != w && li == lj) expected = 2; // via a neighbouring layer
        CHECK(d[w] == expected);
      }
    }
  }
}

TEST_CASE("graph: twins") {
  const Graph p3 = basic_generator(BasicKind::path, 3);
  const Graph g = add_twins(p3, 0, 2);
  CHECK(g.order() == 5);
  CHECK(g.degree(3) == 1);
  CHECK(g.adjacent(3, 1));
  CHECK(g.adjacent(4, 1));
  CHECK_FALSE(g.adjacent(3, 0));
  CHECK(add_twins(p3, 1, 0) == p3);
  const Graph k23 = add_twins(basic_generator(BasicKind::cycle, 4), 0, 1);
  CHECK(k23.neighbors(4).size() == 2);
  CHECK(k23.adjacent(4, 1));
  CHECK(k23.adjacent(4, 3));
  CHECK_THROWS_AS(add_twins(Graph::from_edge_list(2, {}), 0, 1), InvalidArgument);
}

TEST_CASE("graph: disjoint union with links") {
  const Graph p2 = basic_generator(BasicKind::path, 2);
  const std::vector<Graph> parts{p2, p2, p2};
  const std::vector<Link> links{{0, 1, 1, 0}, {1, 1, 2, 0}};
  const LinkedUnion u = disjoint_union_with_links(parts, links);
  CHECK(u.offsets == std::vector<std::size_t>{0, 2, 4});
  CHECK(u.graph == basic_generator(BasicKind::path, 6));
}

TEST_CASE("graph: connectivity and minimum degree") {
  CHECK(is_connected(petersen()));
  CHECK(is_connected(Graph()));
  CHECK_FALSE(is_connected(Graph::from_edge_list(3, {{0, 1}})));
  CHECK(min_degree(basic_generator(BasicKind::path, 4)) == 1);
  CHECK(min_degree(basic_generator(BasicKind::complete, 4)) == 3);
}
