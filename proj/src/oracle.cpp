#include "lrw1/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "lrw1/error.hpp"
#include "lrw1/gf2.hpp"
#include "lrw1/graph_io.hpp"

#ifndef LRW1_DEFAULT_FIXTURES
#define LRW1_DEFAULT_FIXTURES "fixtures"
#endif

namespace lrw1::oracle {

namespace {

using Mask = std::uint32_t;

Bitset mask_bits(int n, Mask mask) {
  return Bitset(static_cast<std::size_t>(n), mask);
}

VertexSet mask_set(Mask mask) {
  VertexSet out;
  for (int v = 0; mask >> v; ++v) {
    if (mask >> v & 1u) out.push_back(v);
  }
  return out;
}

void require_connected(const Graph& g) {
  if (g.empty() || !is_connected(g)) throw Error(ErrorCode::Disconnected, "oracle needs a connected graph");
}

// Adjacency of pair (i, j), i < j, in graph6 bit order. Valid up to 11 vertices.
std::uint64_t edge_key(const Graph& g) {
  std::uint64_t key = 0;
  int bit = 0;
  for (Vertex j = 1; j < g.order(); ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      if (g.adjacent(i, j)) key |= std::uint64_t{1} << bit;
    }
  }
  return key;
}

std::vector<Mask> split_masks(const Graph& g) {
  require_connected(g);
  const int n = g.order();
  if (n > kMaxSplitOrder) throw Error(ErrorCode::TooLarge, "split enumeration limited to 16 vertices");
  std::vector<Mask> out;
  const Mask all = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  for (Mask mask = 1; mask <= all; mask += 2) {
    const int size = std::popcount(mask);
    if (size < 2 || n - size < 2) continue;
    if (cutrank_of_bits(g, mask_bits(n, mask)) == 1) out.push_back(mask);
  }
  return out;
}

bool overlap(Mask a, Mask b, Mask all) {
  return (a & b) && (a & ~b & all) && (~a & b & all) && (~a & ~b & all);
}

std::vector<Mask> strong_masks(const Graph& g) {
  const auto splits = split_masks(g);
  const Mask all = (Mask{1} << g.order()) - 1;
  std::vector<Mask> out;
  for (Mask s : splits) {
    const bool strong = std::none_of(splits.begin(), splits.end(), [&](Mask t) { return overlap(s, t, all); });
    if (strong) out.push_back(s);
  }
  return out;
}

std::vector<VertexSet> sorted_sets(const std::vector<Mask>& masks) {
  std::vector<VertexSet> out;
  for (Mask m : masks) out.push_back(mask_set(m));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

LrwResult brute_lrw_with_ordering(const Graph& g) {
  const int n = g.order();
  if (n > kMaxLrwOrder) throw Error(ErrorCode::TooLarge, "exact lrw limited to 10 vertices");
  if (n == 0) return {};
  const Mask all = (Mask{1} << n) - 1;
  // best[S]: least width of an ordering whose first |S| vertices are S.
  std::vector<int> best(all + 1, std::numeric_limits<int>::max());
  std::vector<Vertex> last(all + 1, -1);
  best[0] = 0;
  for (Mask s = 1; s <= all; ++s) {
    const int cut = cutrank_of_bits(g, mask_bits(n, s));
    for (Vertex v = 0; v < n; ++v) {
      if (!(s >> v & 1u)) continue;
      const int width = std::max(cut, best[s & ~(Mask{1} << v)]);
      if (width < best[s]) {
        best[s] = width;
        last[s] = v;
      }
    }
  }
  LrwResult result;
  result.width = best[all];
  for (Mask s = all; s; s &= ~(Mask{1} << last[s])) result.ordering.push_back(last[s]);
  std::reverse(result.ordering.begin(), result.ordering.end());
  return result;
}

int brute_lrw(const Graph& g) {
  return brute_lrw_with_ordering(g).width;
}

std::vector<VertexSet> brute_splits(const Graph& g) {
  return sorted_sets(split_masks(g));
}

std::vector<VertexSet> brute_strong_splits(const Graph& g) {
  return sorted_sets(strong_masks(g));
}

Decomposition brute_canonical_decomposition(const Graph& g) {
  require_connected(g);
  if (g.order() > kMaxLrwOrder) throw Error(ErrorCode::TooLarge, "brute decomposition limited to 10 vertices");
  Decomposition d;
  d.origin = g;
  d.blocks.push_back(make_block(relabelled(g)));
  BlockVertex next_marker = -1;
  for (bool changed = true; changed;) {
    changed = false;
    for (int b = 0; b < static_cast<int>(d.blocks.size()); ++b) {
      const Block& block = d.blocks[b];
      if (block.size() < 4) continue;
      const auto strong = brute_strong_splits(block.graph);
      if (strong.empty()) continue;
      std::vector<BlockVertex> side;
      for (Vertex local : strong.front()) side.push_back(block.graph.label(local));
      const BlockVertex m_side = next_marker--;
      const BlockVertex m_rest = next_marker--;
      auto [first, second] = refine(block, side, m_side, m_rest);
      const int added = static_cast<int>(d.blocks.size());
      for (auto& m : d.markers) {
        if (m.home_block == b && second.contains(m.id)) m.home_block = added;
      }
      d.blocks[b] = std::move(first);
      d.blocks.push_back(std::move(second));
      d.markers.push_back({m_side, b, m_rest});
      d.markers.push_back({m_rest, added, m_side});
      changed = true;
      break;
    }
  }
  return d;
}

std::vector<Graph> local_equivalence_orbit(const Graph& g, std::size_t cap) {
  if (g.order() > kMaxOrbitOrder) throw Error(ErrorCode::TooLarge, "orbit search limited to 8 vertices");
  std::vector<Graph> orbit{g};
  std::unordered_set<std::uint64_t> seen{edge_key(g)};
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (Vertex x = 0; x < g.order(); ++x) {
      Graph next = local_complement(orbit[head], x);
      if (seen.insert(edge_key(next)).second) {
        if (orbit.size() >= cap) throw Error(ErrorCode::CapExceeded, "local equivalence orbit exceeds cap");
        orbit.push_back(std::move(next));
      }
    }
  }
  return orbit;
}

namespace {

// Vertex-minor search. A vertex v outside the target can always be removed
// in one of three ways: G - v, G*v - v, or (G pivot uv) - v for a fixed
// neighbour u. So only deletions branch until the target order is reached,
// where the local-equivalence orbit is scanned for an isomorphic copy.
class VertexMinorSearch {
 public:
  explicit VertexMinorSearch(const Graph& target) : target_(relabelled(target)) {}

  bool contains(const Graph& g) {
    if (g.order() < target_.order()) return false;
    const std::uint64_t key = edge_key(g) * 16 + static_cast<std::uint64_t>(g.order());
    if (!failed_.insert(key).second) return false;
    if (g.order() == target_.order()) {
      for (const Graph& member : local_equivalence_orbit(g)) {
        if (is_isomorphic_small(member, target_)) return true;
      }
      return false;
    }
    for (Vertex v = 0; v < g.order(); ++v) {
      VertexSet rest;
      for (Vertex u = 0; u < g.order(); ++u) {
        if (u != v) rest.push_back(u);
      }
      if (contains(relabelled(induced_subgraph(g, rest)))) return true;
      if (g.degree(v) == 0) continue;
      if (contains(relabelled(induced_subgraph(local_complement(g, v), rest)))) return true;
      const auto u = static_cast<Vertex>(g.neighbours(v).find_first());
      if (contains(relabelled(induced_subgraph(pivot(g, u, v), rest)))) return true;
    }
    return false;
  }

 private:
  Graph target_;
  std::unordered_set<std::uint64_t> failed_;
};

}  // namespace

bool has_vertex_minor(const Graph& g, const Graph& h) {
  if (g.order() > kMaxOrbitOrder) throw Error(ErrorCode::TooLarge, "vertex-minor search limited to 8 vertices");
  if (h.order() == 0) return true;
  return VertexMinorSearch(h).contains(relabelled(g));
}

bool is_dh_by_distances(const Graph& g) {
  const int n = g.order();
  if (n > kMaxOrbitOrder) throw Error(ErrorCode::TooLarge, "distance test limited to 8 vertices");
  constexpr int kFar = std::numeric_limits<int>::max();
  auto distances = [&](Mask allowed) {
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, kFar));
    for (Vertex s = 0; s < n; ++s) {
      if (!(allowed >> s & 1u)) continue;
      std::vector<Vertex> queue{s};
      dist[s][s] = 0;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex u = queue[head];
        for (Vertex w : g.neighbour_list(u)) {
          if ((allowed >> w & 1u) && dist[s][w] == kFar) {
            dist[s][w] = dist[s][u] + 1;
            queue.push_back(w);
          }
        }
      }
    }
    return dist;
  };
  const Mask all = (Mask{1} << n) - 1;
  const auto full = distances(all);
  for (Mask s = 1; s < all; ++s) {
    const auto sub = distances(s);
    const auto members = mask_set(s);
    const bool connected = std::all_of(members.begin(), members.end(),
                                       [&](Vertex v) { return sub[members.front()][v] != kFar; });
    if (!connected) continue;
    for (Vertex u : members) {
      for (Vertex v : members) {
        if (sub[u][v] != full[u][v]) return false;
      }
    }
  }
  return true;
}

Graph random_dh_graph(int n, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::InvalidVertex, "random_dh_graph needs n >= 1");
  std::mt19937_64 rng(seed);
  Graph g(n);
  for (Vertex x = 1; x < n; ++x) {
    const auto y = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(x));
    auto op = static_cast<int>(rng() % 3);
    if (op == 2 && g.degree(y) == 0) op = 0;
    if (op != 0) {
      for (Vertex w : g.neighbour_list(y)) g.add_edge(x, w);
    }
    if (op != 2) g.add_edge(x, y);  // pendant (0) or true twin (1)
  }
  return g;
}

namespace {

// Largest edge key over vertex orders that list vertices by a refined degree
// signature; permutations only range within signature classes.
std::uint64_t canonical_key(const Graph& g) {
  const int n = g.order();
  std::vector<std::pair<int, std::vector<int>>> signature(n);
  for (Vertex v = 0; v < n; ++v) {
    std::vector<int> nd;
    for (Vertex w : g.neighbour_list(v)) nd.push_back(g.degree(w));
    std::sort(nd.begin(), nd.end());
    signature[v] = {g.degree(v), std::move(nd)};
  }
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return std::tie(signature[a], a) < std::tie(signature[b], b);
  });

  std::vector<std::pair<int, int>> classes;  // [begin, end) ranges of equal signature
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && signature[order[j]] == signature[order[i]]) ++j;
    classes.emplace_back(i, j);
    i = j;
  }
  std::uint64_t best = 0;
  bool first = true;
  // Odometer over per-class permutations.
  for (;;) {
    std::uint64_t key = 0;
    int bit = 0;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i, ++bit) {
        if (g.adjacent(order[i], order[j])) key |= std::uint64_t{1} << bit;
      }
    }
    if (first || key > best) best = key;
    first = false;
    std::size_t c = 0;
    for (; c < classes.size(); ++c) {
      auto [b, e] = classes[c];
      if (std::next_permutation(order.begin() + b, order.begin() + e)) break;
    }
    if (c == classes.size()) break;
  }
  return best;
}

Graph from_key(int n, std::uint64_t key) {
  Graph g(n);
  int bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      if (key >> bit & 1u) g.add_edge(i, j);
    }
  }
  return g;
}

}  // namespace

std::vector<Graph> enumerate_graphs(int n) {
  if (n < 0 || n > kMaxLrwOrder) throw Error(ErrorCode::TooLarge, "enumeration limited to 10 vertices");
  std::set<std::uint64_t> level{0};
  for (int k = 1; k <= n; ++k) {
    std::set<std::uint64_t> next;
    for (std::uint64_t key : level) {
      const Graph base = from_key(k - 1, key);
      for (Mask nbrs = 0; nbrs < (Mask{1} << (k - 1)); ++nbrs) {
        Graph g(k);
        for (auto [u, v] : base.edges()) g.add_edge(u, v);
        for (Vertex u : mask_set(nbrs)) g.add_edge(u, k - 1);
        next.insert(canonical_key(g));
      }
    }
    level = std::move(next);
  }
  std::vector<std::pair<std::string, Graph>> tagged;
  for (std::uint64_t key : level) {
    Graph g = from_key(n, key);
    tagged.emplace_back(to_graph6(g), std::move(g));
  }
  std::sort(tagged.begin(), tagged.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  for (auto& [code, g] : tagged) out.push_back(std::move(g));
  return out;
}

std::filesystem::path fixture_path(const std::filesystem::path& dir, int n) {
  return dir / ("graphs" + std::to_string(n) + ".g6");
}

std::vector<Graph> load_fixture(const std::filesystem::path& dir, int n) {
  std::ifstream in(fixture_path(dir, n));
  if (!in) throw Error(ErrorCode::Parse, "missing fixture " + fixture_path(dir, n).string());
  std::vector<Graph> out;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) out.push_back(parse_graph(line, GraphFormat::Graph6));
  }
  return out;
}

void write_fixture(const std::filesystem::path& dir, int n, const std::vector<Graph>& graphs) {
  std::filesystem::create_directories(dir);
  std::ofstream out(fixture_path(dir, n));
  for (const auto& g : graphs) out << to_graph6(g) << '\n';
}

std::filesystem::path default_fixture_dir() {
  if (const char* env = std::getenv("LRW1_FIXTURES"); env != nullptr && *env != '\0') return env;
  return LRW1_DEFAULT_FIXTURES;
}

}  // namespace lrw1::oracle
