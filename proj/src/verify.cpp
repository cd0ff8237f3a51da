#include <algorithm>

#include "lrw1/error.hpp"
#include "lrw1/gf2.hpp"
#include "lrw1/oracle.hpp"
#include "lrw1/recognize.hpp"

namespace lrw1 {

namespace {

Verdict fail(std::string reason) { return {false, std::move(reason)}; }

Verdict verify_ordering(const Graph& g, const OrderingCertificate& c) {
  std::vector<int> ranks;
  try {
    ranks = prefix_cutranks(g, c.order);
  } catch (const Error& e) {
    return fail(e.what());
  }
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    if (ranks[i] > 1) return fail("prefix of length " + std::to_string(i + 1) + " has cutrank " + std::to_string(ranks[i]));
  }
  return {true, {}};
}

bool is_hole(const Graph& h) {
  if (h.order() < 5 || !is_connected(h)) return false;
  for (Vertex v = 0; v < h.order(); ++v) {
    if (h.degree(v) != 2) return false;
  }
  return true;
}

Verdict verify_obstruction(const Graph& g, const ObstructionCertificate& c) {
  try {
    check_vertex_set(g, c.vertices);
  } catch (const Error& e) {
    return fail(e.what());
  }
  const Graph h = relabelled(induced_subgraph(g, c.vertices));
  const int k = h.order();

  if (c.family == ObstructionFamily::Hole) {
    if (!is_hole(h) || c.hole_length != k) return fail("vertices do not induce a hole of the stated length");
    // Chordless cycles of length >= 5 have lrw 2 and every deletion leaves a path.
    if (k > oracle::kMaxLrwOrder) return {true, {}};
  }
  if (k > oracle::kMaxLrwOrder) return fail("obstruction too large for exact verification");

  switch (c.family) {
    case ObstructionFamily::House:
      if (!is_isomorphic_small(h, graphs::house())) return fail("not a house");
      break;
    case ObstructionFamily::Gem:
      if (!is_isomorphic_small(h, graphs::gem())) return fail("not a gem");
      break;
    case ObstructionFamily::Domino:
      if (!is_isomorphic_small(h, graphs::domino())) return fail("not a domino");
      break;
    case ObstructionFamily::DhStar3:
      if (k > oracle::kMaxOrbitOrder || !oracle::is_dh_by_distances(h)) return fail("not a distance-hereditary graph");
      if (c.catalog_index) {
        const auto& catalog = dh_obstruction_catalog();
        const int i = *c.catalog_index;
        if (i < 0 || i >= static_cast<int>(catalog.size()) || !is_isomorphic_small(h, catalog[i])) {
          return fail("does not match the named catalog entry");
        }
      }
      break;
    case ObstructionFamily::Hole:
      break;
  }

  if (const int w = oracle::brute_lrw(h); w != 2) return fail("induced subgraph has lrw " + std::to_string(w));
  for (Vertex v = 0; v < k; ++v) {
    VertexSet rest;
    for (Vertex u = 0; u < k; ++u) {
      if (u != v) rest.push_back(u);
    }
    if (oracle::brute_lrw(induced_subgraph(h, rest)) > 1) {
      return fail("not minimal: deleting " + std::to_string(c.vertices[v]) + " keeps lrw 2");
    }
  }
  return {true, {}};
}

}  // namespace

Verdict verify_certificate(const Graph& g, const Certificate& c) {
  if (const auto* ordering = std::get_if<OrderingCertificate>(&c)) return verify_ordering(g, *ordering);
  return verify_obstruction(g, std::get<ObstructionCertificate>(c));
}

}  // namespace lrw1
