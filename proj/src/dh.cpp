#include "lrw1/dh.hpp"

#include <map>

#include "lrw1/error.hpp"

namespace lrw1 {

std::string_view to_string(PruneKind kind) {
  switch (kind) {
    case PruneKind::Pendant: return "pendant";
    case PruneKind::TrueTwin: return "true-twin";
    case PruneKind::FalseTwin: return "false-twin";
  }
  return "?";
}

std::string_view to_string(NonDhFamily family) {
  switch (family) {
    case NonDhFamily::House: return "house";
    case NonDhFamily::Gem: return "gem";
    case NonDhFamily::Domino: return "domino";
    case NonDhFamily::Hole: return "hole";
  }
  return "?";
}

namespace {

// Smallest member of `group` other than v, or -1.
Vertex other_member(const std::vector<Vertex>& group, Vertex v) {
  for (Vertex u : group) {
    if (u != v) return u;
  }
  return -1;
}

std::optional<PruningStep> next_step(const Graph& g, const Bitset& alive) {
  std::map<Bitset, std::vector<Vertex>> by_open;
  std::map<Bitset, std::vector<Vertex>> by_closed;
  std::vector<Bitset> open(g.order());
  for (auto x = alive.find_first(); x != Bitset::npos; x = alive.find_next(x)) {
    const auto v = static_cast<Vertex>(x);
    open[v] = g.neighbours(v) & alive;
    Bitset closed = open[v];
    closed.set(v);
    by_open[open[v]].push_back(v);
    by_closed[closed].push_back(v);
  }
  for (auto x = alive.find_first(); x != Bitset::npos; x = alive.find_next(x)) {
    const auto v = static_cast<Vertex>(x);
    if (open[v].count() == 1) {
      return PruningStep{v, PruneKind::Pendant, static_cast<Vertex>(open[v].find_first())};
    }
    Bitset closed = open[v];
    closed.set(v);
    const Vertex false_twin = other_member(by_open[open[v]], v);
    const Vertex true_twin = other_member(by_closed[closed], v);
    if (true_twin >= 0 && (false_twin < 0 || true_twin < false_twin)) {
      return PruningStep{v, PruneKind::TrueTwin, true_twin};
    }
    if (false_twin >= 0) return PruningStep{v, PruneKind::FalseTwin, false_twin};
  }
  return std::nullopt;
}

}  // namespace

std::optional<PruningSequence> pruning_sequence(const Graph& g) {
  if (g.empty() || !is_connected(g)) {
    throw Error(ErrorCode::Disconnected, "pruning requires a connected, non-empty graph");
  }
  PruningSequence seq;
  Bitset alive(static_cast<std::size_t>(g.order()));
  alive.set();
  while (alive.count() > 1) {
    auto step = next_step(g, alive);
    if (!step) return std::nullopt;
    alive.reset(step->removed);
    seq.steps.push_back(*step);
  }
  seq.last = static_cast<Vertex>(alive.find_first());
  return seq;
}

bool is_distance_hereditary(const Graph& g) {
  for (const auto& comp : connected_components(g)) {
    if (comp.size() <= 3) continue;  // every connected graph on <= 3 vertices is DH
    if (!pruning_sequence(induced_subgraph(g, comp))) return false;
  }
  return true;
}

VertexSet non_dh_obstruction(const Graph& g) {
  if (is_distance_hereditary(g)) throw Error(ErrorCode::AlreadyDH, "graph is distance-hereditary");
  // DH is hereditary, so a vertex kept once stays necessary; one pass suffices.
  Bitset keep(static_cast<std::size_t>(g.order()));
  keep.set();
  for (Vertex v = 0; v < g.order(); ++v) {
    keep.reset(v);
    if (is_distance_hereditary(induced_subgraph(g, to_vertex_set(keep)))) keep.set(v);
  }
  return to_vertex_set(keep);
}

std::optional<NonDhClass> classify_non_dh(const Graph& g) {
  const int n = g.order();
  if (n >= 5 && is_connected(g)) {
    bool all_two = true;
    for (Vertex v = 0; v < n && all_two; ++v) all_two = g.degree(v) == 2;
    if (all_two) return NonDhClass{NonDhFamily::Hole, n};
  }
  if (n > kMaxIsomorphismOrder) return std::nullopt;
  if (is_isomorphic_small(g, graphs::house())) return NonDhClass{NonDhFamily::House};
  if (is_isomorphic_small(g, graphs::gem())) return NonDhClass{NonDhFamily::Gem};
  if (is_isomorphic_small(g, graphs::domino())) return NonDhClass{NonDhFamily::Domino};
  return std::nullopt;
}

}  // namespace lrw1
