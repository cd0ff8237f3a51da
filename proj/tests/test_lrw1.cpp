#include <doctest.h>

#include <map>

#include "lrw1/certificate_json.hpp"
#include "lrw1/crosscheck.hpp"
#include "lrw1/dot.hpp"
#include "lrw1/error.hpp"
#include "lrw1/recognize.hpp"
#include "support.hpp"

using namespace lrw1;
using namespace lrw1::testing;

namespace {

struct Extraction {
  StarCase star_case;
  VertexSet vertices;
};

Extraction extract_at_first_branch(const Graph& g) {
  const Decomposition d = canonical_decomposition_dh(g);
  const SplitTree t = split_tree(d);
  for (int u = 0; u < t.size(); ++u) {
    if (t.degree(u) >= 3) return {obstruction_case(t, d, u), extract_lrw1_obstruction(g, t, d, u)};
  }
  throw Error(ErrorCode::NotApplicable, "no branch node");
}

VertexSet all_vertices(int n) {
  VertexSet out(n);
  std::iota(out.begin(), out.end(), 0);
  return out;
}

bool split_tree_is_path(const Graph& g) { return split_tree(canonical_decomposition_dh(g)).is_path(); }

bool is_minimal_lrw2(const Graph& h) {
  if (oracle::brute_lrw(h) != 2) return false;
  for (Vertex v = 0; v < h.order(); ++v) {
    if (oracle::brute_lrw(induced_subgraph(h, without(h.order(), v))) > 1) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("recognize examples") {
  Rng rng(40);
  for (int iter = 0; iter < 100; ++iter) {
    const Graph c = random_caterpillar(uniform(rng, 1, 50), rng);
    const Certificate cert = recognize(c);
    REQUIRE(accepted(cert));
    CHECK(cutrank_of_ordering(c, std::get<OrderingCertificate>(cert).order) <= 1);
  }

  const auto c5 = std::get<ObstructionCertificate>(recognize(graphs::cycle(5)));
  CHECK(c5.vertices == all_vertices(5));
  CHECK(c5.family == ObstructionFamily::Hole);
  CHECK(c5.hole_length == 5);
  CHECK(describe(c5) == "hole(5)");

  const auto net = std::get<ObstructionCertificate>(recognize(graphs::net()));
  CHECK(net.vertices == all_vertices(6));
  CHECK(net.family == ObstructionFamily::DhStar3);
  REQUIRE(net.catalog_index);
  CHECK(is_isomorphic_small(dh_obstruction_catalog()[*net.catalog_index], graphs::net()));

  CHECK(accepted(recognize(Graph(0))));
  CHECK(accepted(recognize(Graph(1))));
  CHECK(std::get<OrderingCertificate>(recognize(Graph(3))).order == VertexSet{0, 1, 2});
}

TEST_CASE("recognize handles components") {
  const Graph g = graphs::disjoint_union(graphs::path(3), graphs::cycle(4));
  const auto order = std::get<OrderingCertificate>(recognize(g)).order;
  CHECK(order.size() == 7);
  CHECK(cutrank_of_ordering(g, order) <= 1);

  const Graph bad = graphs::disjoint_union(graphs::path(3), graphs::net());
  const auto ob = std::get<ObstructionCertificate>(recognize(bad));
  CHECK(ob.vertices == VertexSet{3, 4, 5, 6, 7, 8});
}

TEST_CASE("orderings from path-shaped split trees") {
  auto ordering = [](const Graph& g) {
    const Decomposition d = canonical_decomposition_dh(g);
    return ordering_from_path_tree(split_tree(d), d);
  };
  CHECK(ordering(graphs::path(4)) == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(ordering(graphs::cycle(4)) == std::vector<Vertex>{0, 2, 1, 3});
  CHECK(ordering(graphs::complete(5)) == std::vector<Vertex>{0, 1, 2, 3, 4});
  CHECK(cutrank_of_ordering(graphs::cycle(4), ordering(graphs::cycle(4))) == 1);

  const Decomposition net = canonical_decomposition_dh(graphs::net());
  CHECK_THROWS_AS(ordering_from_path_tree(split_tree(net), net), Error);
}

TEST_CASE("obstruction extraction examples") {
  const Extraction spider = extract_at_first_branch(graphs::spider(2));
  CHECK(spider.star_case == StarCase::VertexCentredStar);
  CHECK(spider.vertices == all_vertices(7));

  const Extraction octa = extract_at_first_branch(graphs::octahedron());
  CHECK(octa.star_case == StarCase::CliqueCentre);
  CHECK(octa.vertices == all_vertices(6));

  Graph net_plus(7);
  for (auto [u, v] : graphs::net().edges()) net_plus.add_edge(u, v);
  net_plus.add_edge(3, 6);
  const Extraction e = extract_at_first_branch(net_plus);
  CHECK(e.vertices == all_vertices(6));
  CHECK(is_isomorphic_small(relabelled(induced_subgraph(net_plus, e.vertices)), graphs::net()));

  const Decomposition p4 = canonical_decomposition_dh(graphs::path(4));
  const SplitTree t = split_tree(p4);
  CHECK_THROWS_AS(extract_lrw1_obstruction(graphs::path(4), t, p4, 0), Error);
  CHECK_THROWS_AS(obstruction_case(t, p4, 0), Error);
}

TEST_CASE("extraction covers all three cases on random DH graphs") {
  Rng rng(41);
  std::map<StarCase, int> seen;
  for (int iter = 0; iter < 400; ++iter) {
    const Graph g = random_dh(uniform(rng, 6, 60), rng);
    if (split_tree_is_path(g)) continue;
    const Extraction e = extract_at_first_branch(g);
    ++seen[e.star_case];
    REQUIRE((e.vertices.size() == 6 || e.vertices.size() == 7));
    REQUIRE(e.vertices.size() == (e.star_case == StarCase::VertexCentredStar ? 7u : 6u));
    const Graph h = relabelled(induced_subgraph(g, e.vertices));
    REQUIRE(is_minimal_lrw2(h));
    REQUIRE(catalog_index_of(h).has_value());
  }
  CHECK(seen.size() == 3);
}

TEST_CASE("marker-centred case takes the neighbour behind the centre first") {
  Rng rng(42);
  int checked = 0;
  for (int iter = 0; iter < 300 && checked < 30; ++iter) {
    const Graph g = random_dh(uniform(rng, 6, 30), rng);
    const Decomposition d = canonical_decomposition_dh(g);
    const SplitTree t = split_tree(d);
    for (int u = 0; u < t.size(); ++u) {
      if (t.degree(u) < 3 || obstruction_case(t, d, u) != StarCase::MarkerCentredStar) continue;
      const auto nbrs = extraction_neighbours(t, d, u);
      REQUIRE(nbrs.size() == 3);
      CHECK(t.marker_towards(u, nbrs[0]) == *d.blocks[t.nodes[u].block].centre);
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("DH obstruction catalog") {
  const auto& catalog = dh_obstruction_catalog();
  CHECK(catalog.size() == 14);
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    for (std::size_t j = i + 1; j < catalog.size(); ++j) CHECK_FALSE(is_isomorphic_small(catalog[i], catalog[j]));
  }
  CHECK(catalog_index_of(graphs::net()).has_value());
  CHECK(catalog_index_of(graphs::octahedron()).has_value());
  CHECK(catalog_index_of(graphs::spider(2)).has_value());
  CHECK_FALSE(catalog_index_of(graphs::cycle(5)).has_value());
  for (const Graph& m : catalog) {
    CHECK(is_connected(m));
    CHECK(is_distance_hereditary(m));
    CHECK(is_minimal_lrw2(m));
    const SplitTree t = split_tree(canonical_decomposition_dh(m));
    CHECK(t.size() == 4);
    CHECK_FALSE(t.is_path());
  }
}

TEST_CASE("verify_certificate examples") {
  Rng rng(43);
  const Graph cat = random_caterpillar(12, rng);
  CHECK(verify_certificate(cat, recognize(cat)));

  std::vector<Vertex> order{0, 1, 2, 3, 4};
  do {
    CHECK_FALSE(verify_certificate(graphs::cycle(5), OrderingCertificate{order}));
  } while (std::next_permutation(order.begin(), order.end()));

  const Graph c5 = graphs::cycle(5);
  CHECK(verify_certificate(c5, ObstructionCertificate{all_vertices(5), ObstructionFamily::Hole, 5, {}}));
  CHECK_FALSE(verify_certificate(c5, ObstructionCertificate{all_vertices(5), ObstructionFamily::Hole, 6, {}}));
  CHECK_FALSE(verify_certificate(c5, ObstructionCertificate{all_vertices(5), ObstructionFamily::House, 0, {}}));
  CHECK_FALSE(verify_certificate(c5, ObstructionCertificate{{0, 1, 2, 3}, ObstructionFamily::Hole, 4, {}}));
  CHECK_FALSE(verify_certificate(c5, ObstructionCertificate{{0, 9}, ObstructionFamily::Hole, 2, {}}));
  CHECK_FALSE(verify_certificate(c5, OrderingCertificate{{0, 1, 2}}));

  const Graph big_hole = graphs::cycle(30);
  CHECK(verify_certificate(big_hole, recognize(big_hole)));

  // Not minimal: the net plus a pendant.
  Graph net_plus(7);
  for (auto [u, v] : graphs::net().edges()) net_plus.add_edge(u, v);
  net_plus.add_edge(3, 6);
  CHECK_FALSE(verify_certificate(net_plus, ObstructionCertificate{all_vertices(7), ObstructionFamily::DhStar3, 0, {}}));
  const auto idx = catalog_index_of(graphs::net());
  CHECK(verify_certificate(net_plus, ObstructionCertificate{all_vertices(6), ObstructionFamily::DhStar3, 0, idx}));
  CHECK_FALSE(
      verify_certificate(net_plus, ObstructionCertificate{all_vertices(6), ObstructionFamily::DhStar3, 0, *idx + 1}));
}

TEST_CASE("certificates are sound on random graphs") {
  Rng rng(44);
  for (int iter = 0; iter < 500; ++iter) {
    const int n = uniform(rng, 1, 40);
    Graph g;
    switch (iter % 3) {
      case 0: g = random_graph(n, uniform(rng, 1, 9) / 10.0, rng); break;
      case 1: g = random_dh(n, rng); break;
      default: g = random_lrw1_graph(n, rng); break;
    }
    const Certificate c = recognize(g);
    REQUIRE(verify_certificate(g, c));
    if (iter % 3 == 2) REQUIRE(accepted(c));
  }
}

TEST_CASE("branching split trees are only reported for genuine branch nodes") {
  Rng rng(45);
  for (int iter = 0; iter < 300; ++iter) {
    const Graph g = random_dh(uniform(rng, 3, 40), rng);
    const SplitTree t = split_tree(canonical_decomposition_dh(g));
    REQUIRE(accepted(recognize(g)) == t.is_path());
    if (t.is_path()) {
      for (int u = 0; u < t.size(); ++u) {
        if (t.degree(u) == 2) REQUIRE_FALSE(t.nodes[u].vertices.empty());
      }
    }
  }
}

TEST_CASE("acceptance is closed under induced subgraphs") {
  for (const Graph& g : connected_fixture_graphs(7)) {
    if (!accepted(recognize(g))) continue;
    for (Vertex v = 0; v < g.order(); ++v) REQUIRE(accepted(recognize(induced_subgraph(g, without(g.order(), v)))));
  }
}

TEST_CASE("decision is invariant under local complementation") {
  Rng rng(46);
  for (int iter = 0; iter < 300; ++iter) {
    const int n = uniform(rng, 1, 12);
    const Graph g = iter % 2 ? random_lrw1_graph(n, rng) : random_graph(n, 0.5, rng);
    const Graph h = random_local_complements(g, uniform(rng, 1, 10), rng);
    REQUIRE(accepted(recognize(g)) == accepted(recognize(h)));
  }
}

TEST_CASE("JSON certificates round-trip") {
  // Labels differ from ids, as for an induced subgraph.
  const Graph g = induced_subgraph(graphs::disjoint_union(graphs::path(4), graphs::net()), VertexSet{1, 2, 3, 4, 5, 6, 7, 8, 9});
  const Certificate bad = recognize(g);
  const auto j = to_json(g, bad);
  CHECK(j["status"] == "lrw_ge_2");
  CHECK(j["obstruction"]["family"] == "dh_star3");
  CHECK(j["obstruction"]["vertices"] == nlohmann::json::array({4, 5, 6, 7, 8, 9}));
  CHECK(j["obstruction"].contains("catalog_index"));
  const Certificate back = certificate_from_json(g, j);
  CHECK(std::get<ObstructionCertificate>(back).vertices == std::get<ObstructionCertificate>(bad).vertices);
  CHECK(verify_certificate(g, back));

  const auto hole = to_json(graphs::cycle(7), recognize(graphs::cycle(7)));
  CHECK(hole.dump() == R"({"obstruction":{"family":"hole","vertices":[0,1,2,3,4,5,6]},"status":"lrw_ge_2"})");
  CHECK(verify_certificate(graphs::cycle(7), certificate_from_json(graphs::cycle(7), hole)));

  Rng rng(47);
  for (int iter = 0; iter < 200; ++iter) {
    const int n = uniform(rng, 1, 20);
    const Graph h = random_graph(n, 0.4, rng);
    const Certificate c = recognize(h);
    const Certificate r = certificate_from_json(h, nlohmann::json::parse(to_json(h, c).dump()));
    REQUIRE(verify_certificate(h, r).ok == verify_certificate(h, c).ok);
    REQUIRE(to_json(h, r) == to_json(h, c));
  }

  CHECK_THROWS_AS(certificate_from_json(g, nlohmann::json::parse(R"({"status":"maybe"})")), Error);
  CHECK_THROWS_AS(certificate_from_json(g, nlohmann::json::parse(R"({"status":"lrw_le_1","ordering":[0]})")), Error);
  CHECK_THROWS_AS(certificate_from_json(g, nlohmann::json::parse(R"({"status":"lrw_le_1"})")), Error);
}

TEST_CASE("DOT export") {
  const Decomposition d = canonical_decomposition_dh(graphs::net());
  const SplitTree t = split_tree(d);
  const std::string sd = decomposition_to_dot(d);
  CHECK(sd.starts_with("graph S {"));
  std::size_t dashed = 0;
  for (std::size_t pos = 0; (pos = sd.find("style=dashed", pos)) != std::string::npos; ++pos) ++dashed;
  CHECK(dashed == 3);
  CHECK(sd.find("subgraph cluster_3") != std::string::npos);
  CHECK(sd == decomposition_to_dot(canonical_decomposition_dh(graphs::net())));

  const std::string tree = split_tree_to_dot(t, d);
  CHECK(tree.find("n0 [label=") != std::string::npos);
  CHECK(tree.find("{}") != std::string::npos);  // the centre node holds no vertex
  std::size_t edges = 0;
  for (std::size_t pos = 0; (pos = tree.find(" -- ", pos)) != std::string::npos; ++pos) ++edges;
  CHECK(edges == 3);

  const std::string listing = block_listing(t, d);
  CHECK(std::count(listing.begin(), listing.end(), '\n') == 4);
}

TEST_CASE("crosscheck harness") {
  const auto dir = oracle::default_fixture_dir();
  const auto good = crosscheck(dir, 5, [](const Graph& g) { return recognize(g); });
  CHECK(good.ok());
  REQUIRE(good.rows.size() == 5);
  CHECK(good.rows[4].connected == 21);

  // Accepting everything with the identity ordering must be caught.
  const auto lenient = crosscheck(dir, 5, [](const Graph& g) {
    return Certificate{OrderingCertificate{all_vertices(g.order())}};
  });
  CHECK_FALSE(lenient.ok());
  // Dropping one vertex from obstructions must be caught too.
  const auto sloppy = crosscheck(dir, 6, [](const Graph& g) {
    Certificate c = recognize(g);
    if (auto* o = std::get_if<ObstructionCertificate>(&c)) o->vertices.pop_back();
    return c;
  });
  CHECK_FALSE(sloppy.ok());
  CHECK(sloppy.disagreements.size() == 21 - 18 + 112 - 63);
  CHECK_THROWS_AS(crosscheck("/nonexistent", 3, [](const Graph& g) { return recognize(g); }), Error);
}
