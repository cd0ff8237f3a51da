#include <doctest.h>

#include "lrw1/dh.hpp"
#include "lrw1/error.hpp"
#include "support.hpp"

using namespace lrw1;
using namespace lrw1::testing;

TEST_CASE("pruning sequence examples") {
  const auto k1 = pruning_sequence(Graph(1));
  REQUIRE(k1);
  CHECK(k1->steps.empty());
  CHECK(k1->last == 0);

  CHECK_FALSE(pruning_sequence(graphs::cycle(5)));
  CHECK_THROWS_AS(pruning_sequence(Graph(2)), Error);
  CHECK_THROWS_AS(pruning_sequence(Graph(0)), Error);

  const auto p4 = pruning_sequence(graphs::path(4));
  REQUIRE(p4);
  CHECK(p4->steps.front() == PruningStep{0, PruneKind::Pendant, 1});
}

TEST_CASE("trees prune by pendants only") {
  Rng rng(8);
  for (int iter = 0; iter < 200; ++iter) {
    const int n = uniform(rng, 1, 40);
    Graph t(n);
    for (Vertex v = 1; v < n; ++v) t.add_edge(v, uniform(rng, 0, v - 1));
    t = permuted(t, random_permutation(n, rng));
    const auto seq = pruning_sequence(t);
    REQUIRE(seq);
    CHECK(replay_is_valid(t, *seq));
    for (const auto& s : seq->steps) CHECK(s.kind == PruneKind::Pendant);
  }
}

TEST_CASE("greedy picks the smallest removable vertex") {
  // K3 plus pendant 3 on 2: vertex 0 is a true twin of 1 before 3 is a pendant.
  Graph g = graphs::complete(3);
  Graph h(4);
  for (auto [u, v] : g.edges()) h.add_edge(u, v);
  h.add_edge(2, 3);
  const auto seq = pruning_sequence(h);
  REQUIRE(seq);
  CHECK(seq->steps.front() == PruningStep{0, PruneKind::TrueTwin, 1});
}

TEST_CASE("distance-hereditary examples") {
  Rng rng(9);
  for (int iter = 0; iter < 50; ++iter) CHECK(is_distance_hereditary(random_caterpillar(uniform(rng, 1, 30), rng)));
  CHECK_FALSE(is_distance_hereditary(graphs::house()));
  CHECK_FALSE(is_distance_hereditary(graphs::gem()));
  CHECK_FALSE(is_distance_hereditary(graphs::domino()));
  for (int k = 5; k <= 12; ++k) CHECK_FALSE(is_distance_hereditary(graphs::cycle(k)));
  CHECK(is_distance_hereditary(graphs::cycle(4)));
  CHECK(is_distance_hereditary(graphs::octahedron()));
  CHECK(is_distance_hereditary(graphs::net()));
  CHECK(is_distance_hereditary(Graph(0)));
  CHECK(is_distance_hereditary(graphs::disjoint_union(graphs::path(3), graphs::complete(4))));
  CHECK_FALSE(is_distance_hereditary(graphs::disjoint_union(graphs::path(3), graphs::cycle(6))));
}

TEST_CASE("pruning agrees with the distance definition on all connected graphs up to 7 vertices") {
  int dh = 0;
  for (const Graph& g : connected_fixture_graphs(7)) {
    const auto seq = pruning_sequence(g);
    REQUIRE(seq.has_value() == oracle::is_dh_by_distances(g));
    if (seq) {
      ++dh;
      REQUIRE(replay_is_valid(g, *seq));
    }
  }
  CHECK(dh > 0);
}

TEST_CASE("random DH graphs replay") {
  Rng rng(10);
  for (int iter = 0; iter < 300; ++iter) {
    const Graph g = random_dh(uniform(rng, 1, 60), rng);
    const auto seq = pruning_sequence(g);
    REQUIRE(seq);
    CHECK(replay_is_valid(g, *seq));
  }
}

TEST_CASE("non-DH obstruction examples") {
  CHECK(non_dh_obstruction(graphs::cycle(5)) == VertexSet{0, 1, 2, 3, 4});
  CHECK(non_dh_obstruction(graphs::cycle(8)) == VertexSet{0, 1, 2, 3, 4, 5, 6, 7});

  Graph c5_pendant(6);
  for (auto [u, v] : graphs::cycle(5).edges()) c5_pendant.add_edge(u, v);
  c5_pendant.add_edge(0, 5);
  CHECK(non_dh_obstruction(c5_pendant) == VertexSet{0, 1, 2, 3, 4});
  CHECK_THROWS_AS(non_dh_obstruction(graphs::net()), Error);

  CHECK(classify_non_dh(graphs::house())->family == NonDhFamily::House);
  CHECK(classify_non_dh(graphs::gem())->family == NonDhFamily::Gem);
  CHECK(classify_non_dh(graphs::domino())->family == NonDhFamily::Domino);
  CHECK(classify_non_dh(graphs::cycle(9))->hole_length == 9);
  CHECK_FALSE(classify_non_dh(graphs::cycle(4)));
}

TEST_CASE("non-DH obstructions are minimal and named") {
  Rng rng(12);
  int checked = 0;
  for (int iter = 0; iter < 400; ++iter) {
    const int n = uniform(rng, 5, 14);
    const Graph g = random_graph(n, uniform(rng, 1, 6) / 10.0, rng);
    if (is_distance_hereditary(g)) continue;
    ++checked;
    const VertexSet s = non_dh_obstruction(g);
    const Graph h = relabelled(induced_subgraph(g, s));
    CHECK_FALSE(is_distance_hereditary(h));
    CHECK(classify_non_dh(h).has_value());
    for (Vertex v = 0; v < h.order(); ++v) CHECK(is_distance_hereditary(induced_subgraph(h, without(h.order(), v))));
  }
  CHECK(checked > 100);
}
