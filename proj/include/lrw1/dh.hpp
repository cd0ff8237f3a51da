#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "lrw1/graph.hpp"

namespace lrw1 {

enum class PruneKind { Pendant, TrueTwin, FalseTwin };

std::string_view to_string(PruneKind kind);

/// One elimination: `removed` is a pendant attached to `partner`, or a
/// true/false twin of `partner`, in the graph left by the earlier steps.
struct PruningStep {
  Vertex removed = 0;
  PruneKind kind = PruneKind::Pendant;
  Vertex partner = 0;

  friend bool operator==(const PruningStep&, const PruningStep&) = default;
};

struct PruningSequence {
  std::vector<PruningStep> steps;
  Vertex last = 0;
};

/// Greedy pendant/twin elimination of a connected graph. At each step the
/// smallest removable vertex is taken, pendant before twin, and the smallest
/// twin partner. Returns nullopt iff the graph is not distance-hereditary.
/// Throws Disconnected (also for the empty graph).
std::optional<PruningSequence> pruning_sequence(const Graph& g);

/// True iff every connected component admits a pruning sequence.
bool is_distance_hereditary(const Graph& g);

/// Minimal non-DH vertex set found by one ascending pass of greedy deletion.
/// Throws AlreadyDH.
VertexSet non_dh_obstruction(const Graph& g);

enum class NonDhFamily { House, Gem, Domino, Hole };

std::string_view to_string(NonDhFamily family);

struct NonDhClass {
  NonDhFamily family;
  int hole_length = 0;  // set for Hole
};

/// Names a minimal non-DH graph; nullopt if it is none of house, gem, domino
/// or a hole of length >= 5.
std::optional<NonDhClass> classify_non_dh(const Graph& g);

}  // namespace lrw1
