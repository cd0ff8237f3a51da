#pragma once

// Generators and independent reference checks shared by the test binaries.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "lrw1/dh.hpp"
#include "lrw1/gf2.hpp"
#include "lrw1/graph.hpp"
#include "lrw1/oracle.hpp"

namespace lrw1::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Graph random_graph(int n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

inline Graph random_connected_graph(int n, double p, Rng& rng) {
  for (;;) {
    Graph g = random_graph(n, p, rng);
    if (is_connected(g)) return g;
  }
}

inline std::vector<Vertex> random_permutation(int n, Rng& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

/// Vertex v of g becomes perm[v].
inline Graph permuted(const Graph& g, const std::vector<Vertex>& perm) {
  Graph h(g.order());
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

/// Spine of length `spine` with the remaining vertices hung as leaves on
/// random spine vertices.
inline Graph random_caterpillar(int n, Rng& rng) {
  Graph g(n);
  const int spine = n <= 2 ? n : uniform(rng, 1, n);
  for (int i = 0; i + 1 < spine; ++i) g.add_edge(i, i + 1);
  for (Vertex v = spine; v < n; ++v) g.add_edge(v, uniform(rng, 0, spine - 1));
  return g;
}

inline Graph random_local_complements(Graph g, int steps, Rng& rng) {
  for (int i = 0; i < steps && g.order() > 0; ++i) g = local_complement(g, uniform(rng, 0, g.order() - 1));
  return g;
}

/// Connected graph of linear rank-width at most 1 on n vertices: a caterpillar
/// moved around its local-equivalence class and relabelled.
inline Graph random_lrw1_graph(int n, Rng& rng) {
  Graph g = random_local_complements(random_caterpillar(n, rng), uniform(rng, 0, 2 * n), rng);
  return permuted(g, random_permutation(n, rng));
}

inline Graph random_dh(int n, Rng& rng) {
  return permuted(oracle::random_dh_graph(n, rng()), random_permutation(n, rng));
}

/// Replays `seq` on g, re-checking each pendant/twin condition from scratch.
inline bool replay_is_valid(const Graph& g, const PruningSequence& seq) {
  const int n = g.order();
  if (static_cast<int>(seq.steps.size()) != n - 1) return false;
  std::vector<char> alive(n, 1);
  auto nbrs = [&](Vertex v) {
    std::vector<Vertex> out;
    for (Vertex w = 0; w < n; ++w) {
      if (alive[w] && w != v && g.adjacent(v, w)) out.push_back(w);
    }
    return out;
  };
  for (const auto& s : seq.steps) {
    const Vertex x = s.removed;
    const Vertex y = s.partner;
    if (x < 0 || x >= n || y < 0 || y >= n || x == y || !alive[x] || !alive[y]) return false;
    auto nx = nbrs(x);
    auto ny = nbrs(y);
    switch (s.kind) {
      case PruneKind::Pendant:
        if (nx != std::vector<Vertex>{y}) return false;
        break;
      case PruneKind::TrueTwin: {
        if (!g.adjacent(x, y)) return false;
        std::erase(nx, y);
        std::erase(ny, x);
        if (nx != ny) return false;
        break;
      }
      case PruneKind::FalseTwin:
        if (g.adjacent(x, y) || nx != ny) return false;
        break;
    }
    alive[x] = 0;
  }
  return std::count(alive.begin(), alive.end(), 1) == 1 && alive[seq.last];
}

/// Minimum over all n! orderings, no pruning.
inline int naive_lrw(const Graph& g) {
  std::vector<Vertex> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  int best = g.order();
  do {
    best = std::min(best, cutrank_of_ordering(g, order));
  } while (std::next_permutation(order.begin(), order.end()));
  return g.order() == 0 ? 0 : best;
}

inline std::vector<Graph> connected_fixture_graphs(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    for (auto& g : oracle::load_fixture(oracle::default_fixture_dir(), n)) {
      if (is_connected(g)) out.push_back(std::move(g));
    }
  }
  return out;
}

inline std::vector<Graph> all_fixture_graphs(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    auto graphs = oracle::load_fixture(oracle::default_fixture_dir(), n);
    out.insert(out.end(), graphs.begin(), graphs.end());
  }
  return out;
}

inline VertexSet without(int n, Vertex skip) {
  VertexSet out;
  for (Vertex v = 0; v < n; ++v) {
    if (v != skip) out.push_back(v);
  }
  return out;
}

}  // namespace lrw1::testing
