#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lrw1/graph.hpp"
#include "lrw1/split_decomposition.hpp"

namespace lrw1 {

enum class ObstructionFamily { House, Gem, Domino, Hole, DhStar3 };

std::string_view to_string(ObstructionFamily family);

/// Vertex ordering of cutrank at most 1.
struct OrderingCertificate {
  std::vector<Vertex> order;
};

/// Induced subgraph of linear rank-width 2 whose every single-vertex
/// deletion has linear rank-width at most 1.
struct ObstructionCertificate {
  VertexSet vertices;
  ObstructionFamily family = ObstructionFamily::Hole;
  int hole_length = 0;               // Hole only
  std::optional<int> catalog_index;  // DhStar3 only
};

using Certificate = std::variant<OrderingCertificate, ObstructionCertificate>;

/// "hole(5)", "house", "dh_star3[2]", ...
std::string describe(const ObstructionCertificate& obstruction);

/// Decides lrw <= 1. Components are handled in order of their smallest
/// vertex; orderings are concatenated and the first failing component's
/// obstruction is returned. Every certificate is verified before it leaves.
Certificate recognize(const Graph& g);

inline bool accepted(const Certificate& c) { return std::holds_alternative<OrderingCertificate>(c); }

/// Concatenates V(u) along the path, each node's vertices ascending, starting
/// from the end node holding the smaller vertex id. Throws NotAPath.
std::vector<Vertex> ordering_from_path_tree(const SplitTree& t, const Decomposition& d);

/// Which shape the block of a degree >= 3 node has.
enum class StarCase { CliqueCentre = 1, MarkerCentredStar = 2, VertexCentredStar = 3 };

StarCase obstruction_case(const SplitTree& t, const Decomposition& d, int node);

/// The three neighbours used for extraction at `node`: the smallest ids,
/// except that the neighbour behind a marker centre always comes first.
std::vector<int> extraction_neighbours(const SplitTree& t, const Decomposition& d, int node);

/// 6 or 7 vertices of g inducing a minimal obstruction around `node`.
/// Throws NotApplicable below degree 3 and InternalInvariantViolation if the
/// extracted set fails verification.
VertexSet extract_lrw1_obstruction(const Graph& g, const SplitTree& t, const Decomposition& d, int node);

/// Distance-hereditary induced-subgraph obstructions for lrw 1, one per
/// isomorphism class, generated from the three centre-block shapes.
const std::vector<Graph>& dh_obstruction_catalog();

std::optional<int> catalog_index_of(const Graph& g);

struct Verdict {
  bool ok = false;
  std::string reason;

  explicit operator bool() const noexcept { return ok; }
};

/// Independent check using only cut ranks and the brute-force oracle.
/// Obstructions other than holes must have at most 10 vertices.
Verdict verify_certificate(const Graph& g, const Certificate& c);

}  // namespace lrw1
