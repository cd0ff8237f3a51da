#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace lrw1 {

using Vertex = int;
using Bitset = boost::dynamic_bitset<std::uint64_t>;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected loop-free graph on dense ids 0..n-1.
///
/// Each vertex carries an external label (the id it had in the input, or in
/// the parent graph for induced subgraphs) so that certificates can be
/// reported in input terms. Equality compares labels and edges.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::vector<int> labels);

  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const;
  bool empty() const noexcept { return adj_.empty(); }

  bool contains(Vertex v) const noexcept { return v >= 0 && v < order(); }
  bool adjacent(Vertex u, Vertex v) const { return adj_[u].test(v); }
  const Bitset& neighbours(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].count()); }
  std::vector<Vertex> neighbour_list(Vertex v) const;
  std::vector<Edge> edges() const;

  int label(Vertex v) const { return labels_[v]; }
  const std::vector<int>& labels() const noexcept { return labels_; }

  // Construction-time mutators; every operation below treats graphs as values.
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  void toggle_edge(Vertex u, Vertex v);

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.adj_ == b.adj_;
  }

 private:
  void check_pair(Vertex u, Vertex v) const;

  std::vector<Bitset> adj_;
  std::vector<int> labels_;
};

/// Throws InvalidVertex unless `set` is strictly increasing and inside V(g).
void check_vertex_set(const Graph& g, std::span<const Vertex> set);

/// Sorts and deduplicates.
VertexSet make_vertex_set(std::vector<Vertex> vertices);

Bitset to_bitset(int n, std::span<const Vertex> set);
VertexSet to_vertex_set(const Bitset& bits);

Graph induced_subgraph(const Graph& g, std::span<const Vertex> set);
Graph local_complement(const Graph& g, Vertex x);
Graph pivot(const Graph& g, Vertex x, Vertex y);

/// Each component sorted, components ordered by smallest element.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Edge-preserving bijection test by degree-pruned backtracking; both graphs
/// must have at most kMaxIsomorphismOrder vertices.
inline constexpr int kMaxIsomorphismOrder = 10;
bool is_isomorphic_small(const Graph& g, const Graph& h);

/// Same graph with labels reset to 0..n-1.
Graph relabelled(const Graph& g);

namespace graphs {

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph star(int leaves);
Graph net();
Graph octahedron();  // co-(3K2)
Graph house();
Graph gem();
Graph domino();
/// Centre 0 with three legs of length `leg`.
Graph spider(int leg);
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace graphs

}  // namespace lrw1
