// Distance-hereditary obstructions for linear rank-width 1: graphs whose
// split tree is a star with three leaves, enumerated by the shape of the
// centre block and of the three leaf blocks, then recomposed.

#include <array>

#include "lrw1/recognize.hpp"

namespace lrw1 {

namespace {

enum class Leaf {
  MarkerCentredStar,  // two false twins hanging off the marker
  VertexCentredStar,  // graph vertex in the centre, marker and one vertex as leaves
  Clique,             // triangle on the marker and two vertices
};

enum class Centre { Clique3, MarkerStar3, VertexStar4 };

class CatalogBuilder {
 public:
  Graph build(Centre centre, std::array<Leaf, 3> leaves) {
    Decomposition d;
    next_vertex_ = 0;
    // Centre-side markers are -1, -3, -5; their partners -2, -4, -6.
    const std::array<BlockVertex, 3> inner{-1, -3, -5};
    switch (centre) {
      case Centre::Clique3:
        d.blocks.push_back(make_block({inner[0], inner[1], inner[2]}, BlockKind::Clique));
        break;
      case Centre::MarkerStar3:
        d.blocks.push_back(make_block({inner[0], inner[1], inner[2]}, BlockKind::Star, inner[0]));
        break;
      case Centre::VertexStar4: {
        const Vertex c = next_vertex_++;
        d.blocks.push_back(make_block({c, inner[0], inner[1], inner[2]}, BlockKind::Star, c));
        break;
      }
    }
    for (int i = 0; i < 3; ++i) {
      const BlockVertex outer = inner[i] - 1;
      const Vertex a = next_vertex_++;
      const Vertex b = next_vertex_++;
      switch (leaves[i]) {
        case Leaf::MarkerCentredStar:
          d.blocks.push_back(make_block({outer, a, b}, BlockKind::Star, outer));
          break;
        case Leaf::VertexCentredStar:
          d.blocks.push_back(make_block({outer, a, b}, BlockKind::Star, a));
          break;
        case Leaf::Clique:
          d.blocks.push_back(make_block({outer, a, b}, BlockKind::Clique));
          break;
      }
      d.markers.push_back({inner[i], 0, outer});
      d.markers.push_back({outer, i + 1, inner[i]});
    }
    d.origin = Graph(next_vertex_);
    return recompose(d);
  }

 private:
  Vertex next_vertex_ = 0;
};

std::vector<Graph> build_catalog() {
  CatalogBuilder builder;
  std::vector<Graph> candidates;
  using enum Leaf;
  // Clique centre: every leaf is a three-vertex star, either false twins
  // behind the marker or a pendant pair.
  for (int twins = 3; twins >= 0; --twins) {
    std::array<Leaf, 3> leaves{};
    for (int i = 0; i < 3; ++i) leaves[i] = i < twins ? MarkerCentredStar : VertexCentredStar;
    candidates.push_back(builder.build(Centre::Clique3, leaves));
  }
  // Star centred at the marker towards the first leaf: that leaf is a clique
  // or a marker-centred star, the other two are cliques or vertex-centred stars.
  for (Leaf first : {Clique, MarkerCentredStar}) {
    for (int cliques = 2; cliques >= 0; --cliques) {
      std::array<Leaf, 3> leaves{first, cliques >= 1 ? Clique : VertexCentredStar,
                                 cliques >= 2 ? Clique : VertexCentredStar};
      candidates.push_back(builder.build(Centre::MarkerStar3, leaves));
    }
  }
  // Star centred at a graph vertex with three marker leaves.
  for (int cliques = 3; cliques >= 0; --cliques) {
    std::array<Leaf, 3> leaves{};
    for (int i = 0; i < 3; ++i) leaves[i] = i < cliques ? Clique : VertexCentredStar;
    candidates.push_back(builder.build(Centre::VertexStar4, leaves));
  }

  std::vector<Graph> catalog;
  for (auto& g : candidates) {
    bool seen = false;
    for (const auto& member : catalog) seen = seen || is_isomorphic_small(member, g);
    if (!seen) catalog.push_back(std::move(g));
  }
  return catalog;
}

}  // namespace

const std::vector<Graph>& dh_obstruction_catalog() {
  static const std::vector<Graph> catalog = build_catalog();
  return catalog;
}

std::optional<int> catalog_index_of(const Graph& g) {
  if (g.order() > kMaxIsomorphismOrder) return std::nullopt;
  const auto& catalog = dh_obstruction_catalog();
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    if (is_isomorphic_small(catalog[i], g)) return static_cast<int>(i);
  }
  return std::nullopt;
}

}  // namespace lrw1
