#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "lrw1/graph.hpp"
#include "lrw1/split_decomposition.hpp"

// Brute-force references. Everything here is exponential and guarded by a
// vertex-count limit; nothing in this file calls the recognizer.
namespace lrw1::oracle {

inline constexpr int kMaxLrwOrder = 10;
inline constexpr int kMaxSplitOrder = 16;
inline constexpr int kMaxOrbitOrder = 8;
inline constexpr std::size_t kDefaultOrbitCap = 1'000'000;

struct LrwResult {
  int width = 0;
  std::vector<Vertex> ordering;  // one ordering attaining `width`
};

/// Exact linear rank-width by dynamic programming over prefix sets.
LrwResult brute_lrw_with_ordering(const Graph& g);
int brute_lrw(const Graph& g);

/// Every split side containing vertex 0, sorted. Requires a connected graph.
std::vector<VertexSet> brute_splits(const Graph& g);
/// The splits overlapping no other split.
std::vector<VertexSet> brute_strong_splits(const Graph& g);

/// Top-down decomposition: refine any block along its first strong split
/// until no block has one.
Decomposition brute_canonical_decomposition(const Graph& g);

/// BFS closure under local complementation, deduplicated by exact equality.
/// Throws CapExceeded once more than `cap` graphs are found.
std::vector<Graph> local_equivalence_orbit(const Graph& g, std::size_t cap = kDefaultOrbitCap);

/// True iff some graph locally equivalent to g has an induced subgraph
/// isomorphic to h.
bool has_vertex_minor(const Graph& g, const Graph& h);

/// Every connected induced subgraph preserves distances.
bool is_dh_by_distances(const Graph& g);

/// Connected DH graph grown from K1 by seeded pendant / true-twin /
/// false-twin additions.
Graph random_dh_graph(int n, std::uint64_t seed);

/// All graphs on n vertices up to isomorphism, by canonical augmentation.
/// Output is sorted by graph6 string.
std::vector<Graph> enumerate_graphs(int n);

/// fixtures/graphs<n>.g6 inside `dir`.
std::filesystem::path fixture_path(const std::filesystem::path& dir, int n);
std::vector<Graph> load_fixture(const std::filesystem::path& dir, int n);
void write_fixture(const std::filesystem::path& dir, int n, const std::vector<Graph>& graphs);

/// Directory named by LRW1_FIXTURES, else the compiled-in default.
std::filesystem::path default_fixture_dir();

}  // namespace lrw1::oracle
