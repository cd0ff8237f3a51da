#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lrw1/dh.hpp"
#include "lrw1/graph.hpp"

namespace lrw1 {

/// Vertex of a block: a vertex of the decomposed graph when >= 0, a marker
/// when < 0. Marker ids are allocated -1, -2, ...
using BlockVertex = int;

inline bool is_marker(BlockVertex x) noexcept { return x < 0; }

enum class BlockKind { Prime, Clique, Star };

std::string_view to_string(BlockKind kind);

/// One graph of a decomposition. The block graph's labels are the block
/// vertex ids, so local index i stands for `members()[i]`.
struct Block {
  Graph graph;
  BlockKind kind = BlockKind::Prime;
  std::optional<BlockVertex> centre;  // stars only

  const std::vector<int>& members() const noexcept { return graph.labels(); }
  int size() const noexcept { return graph.order(); }
  /// Local index of a member, or -1.
  int local(BlockVertex x) const;
  bool contains(BlockVertex x) const { return local(x) >= 0; }
};

/// Classifies the block graph: clique or star on >= 3 vertices, prime
/// otherwise. Graphs on <= 2 vertices are reported as cliques; they only
/// occur as the single block of a 1- or 2-vertex graph.
Block make_block(Graph graph);

/// Block built from its members and kind; stars need a centre.
Block make_block(std::vector<BlockVertex> members, BlockKind kind, std::optional<BlockVertex> centre = {});

struct Marker {
  BlockVertex id = -1;
  int home_block = 0;
  BlockVertex partner = -1;
};

/// Blocks indexed by position; marked edges join each marker to its partner.
struct Decomposition {
  std::vector<Block> blocks;
  std::vector<Marker> markers;
  Graph origin;

  const Marker* find_marker(BlockVertex id) const;
  /// Block holding an original vertex, or -1.
  int block_of(Vertex v) const;
};

/// |X| >= 2, |V \ X| >= 2 and cutrank exactly 1. Throws InvalidVertex.
bool is_split(const Graph& g, std::span<const Vertex> side);

/// Splits `block` along {side, rest}: returns (G^X with `marker_side`, G^Y
/// with `marker_rest`). `side` lists block vertex ids. Throws NotASplit.
std::pair<Block, Block> refine(const Block& block, std::span<const BlockVertex> side, BlockVertex marker_side,
                               BlockVertex marker_rest);

/// Contracts every marked edge. Throws MalformedDecomposition on broken
/// structure or when the recovered vertex set differs from the origin's.
Graph recompose(const Decomposition& d);

/// Canonical split decomposition of a connected DH graph, built by replaying
/// `seq` backwards. Throws NotDH when g is not connected DH-shaped and
/// InvalidSequence when a step does not hold in g.
Decomposition canonical_decomposition_dh(const Graph& g, const PruningSequence& seq);

/// Convenience overload computing the pruning sequence.
Decomposition canonical_decomposition_dh(const Graph& g);

/// Merges neighbouring cliques, star pairs joined centre-to-leaf, and
/// dissolves two-vertex blocks, to a fixpoint. Prime blocks are left alone.
Decomposition normalize(const Decomposition& d);

struct SplitTreeNode {
  int block = 0;
  BlockKind kind = BlockKind::Prime;
  std::optional<BlockVertex> centre;
  VertexSet vertices;  // V(u)
};

/// Tree obtained by contracting solid edges: node i is block i.
struct SplitTree {
  struct Link {
    int node;
    BlockVertex marker;  // marker inside this node's block pointing at `node`
  };

  std::vector<SplitTreeNode> nodes;
  std::vector<std::vector<Link>> links;

  int size() const noexcept { return static_cast<int>(nodes.size()); }
  int degree(int u) const { return static_cast<int>(links[u].size()); }
  bool adjacent(int u, int v) const;
  /// Marker of u's block whose partner lies in v's block; throws NotATreeEdge.
  BlockVertex marker_towards(int u, int v) const;
  bool is_path() const;
  std::vector<std::pair<int, int>> edges() const;
};

SplitTree split_tree(const Decomposition& d);

/// Union of V(w) over the nodes w on u's side of tree edge uv.
VertexSet side_vertices(const SplitTree& t, int u, int v);

struct Violation {
  enum class Kind { Structure, NotATree, BlockKind, AdjacentCliques, StarOrientation, Recompose };
  Kind kind;
  std::vector<int> blocks;
  std::string detail;
};

std::string_view to_string(Violation::Kind kind);

/// Empty iff the decomposition is canonical and recomposes to its origin.
std::vector<Violation> validate_canonical(const Decomposition& d);

/// True iff an isomorphism of S(a) and S(b) preserving marked edges and
/// fixing every original vertex exists.
bool equivalent_decompositions(const Decomposition& a, const Decomposition& b);

}  // namespace lrw1
