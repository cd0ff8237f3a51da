#include "lrw1/split_decomposition.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <unordered_map>

#include "lrw1/error.hpp"
#include "lrw1/gf2.hpp"

namespace lrw1 {

std::string_view to_string(BlockKind kind) {
  switch (kind) {
    case BlockKind::Prime: return "prime";
    case BlockKind::Clique: return "clique";
    case BlockKind::Star: return "star";
  }
  return "?";
}

std::string_view to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::Structure: return "structure";
    case Violation::Kind::NotATree: return "not-a-tree";
    case Violation::Kind::BlockKind: return "(i) block kind";
    case Violation::Kind::AdjacentCliques: return "(ii) adjacent cliques";
    case Violation::Kind::StarOrientation: return "(iii) star orientation";
    case Violation::Kind::Recompose: return "recompose";
  }
  return "?";
}

int Block::local(BlockVertex x) const {
  const auto& m = members();
  const auto it = std::find(m.begin(), m.end(), x);
  return it == m.end() ? -1 : static_cast<int>(it - m.begin());
}

Block make_block(Graph graph) {
  Block b;
  const int n = graph.order();
  const std::size_t m = graph.edge_count();
  const bool complete = m == static_cast<std::size_t>(n) * static_cast<std::size_t>(std::max(n - 1, 0)) / 2;
  b.kind = BlockKind::Prime;
  if (complete) {
    b.kind = BlockKind::Clique;
  } else if (n >= 3 && m == static_cast<std::size_t>(n - 1)) {
    for (Vertex v = 0; v < n; ++v) {
      if (graph.degree(v) == n - 1) {
        b.kind = BlockKind::Star;
        b.centre = graph.label(v);
        break;
      }
    }
  }
  b.graph = std::move(graph);
  return b;
}

Block make_block(std::vector<BlockVertex> members, BlockKind kind, std::optional<BlockVertex> centre) {
  const int n = static_cast<int>(members.size());
  Graph g(n, members);
  if (kind == BlockKind::Clique) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    }
  } else if (kind == BlockKind::Star) {
    const auto it = centre ? std::find(members.begin(), members.end(), *centre) : members.end();
    if (it == members.end()) throw Error(ErrorCode::MalformedDecomposition, "star block without a member centre");
    const int c = static_cast<int>(it - members.begin());
    for (int i = 0; i < n; ++i) {
      if (i != c) g.add_edge(c, i);
    }
  } else {
    throw Error(ErrorCode::MalformedDecomposition, "prime blocks need explicit edges");
  }
  Block b;
  b.graph = std::move(g);
  b.kind = kind;
  if (kind == BlockKind::Star) b.centre = centre;
  return b;
}

const Marker* Decomposition::find_marker(BlockVertex id) const {
  for (const auto& m : markers) {
    if (m.id == id) return &m;
  }
  return nullptr;
}

int Decomposition::block_of(Vertex v) const {
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].contains(v)) return static_cast<int>(i);
  }
  return -1;
}

bool is_split(const Graph& g, std::span<const Vertex> side) {
  check_vertex_set(g, side);
  const auto k = static_cast<int>(side.size());
  if (k < 2 || g.order() - k < 2) return false;
  return cutrank_of_cut(g, side) == 1;
}

std::pair<Block, Block> refine(const Block& block, std::span<const BlockVertex> side, BlockVertex marker_side,
                               BlockVertex marker_rest) {
  const Graph& g = block.graph;
  std::vector<Vertex> local_side;
  for (BlockVertex x : side) {
    const int i = block.local(x);
    if (i < 0) throw Error(ErrorCode::InvalidVertex, "split side names a non-member");
    local_side.push_back(i);
  }
  local_side = make_vertex_set(std::move(local_side));
  if (local_side.size() != side.size() || !is_split(g, local_side)) {
    throw Error(ErrorCode::NotASplit, "bipartition is not a split of the block");
  }
  const Bitset in_side = to_bitset(g.order(), local_side);

  auto build = [&](bool want_side, BlockVertex marker) {
    std::vector<Vertex> part;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (in_side.test(v) == want_side) part.push_back(v);
    }
    std::vector<int> labels;
    for (Vertex v : part) labels.push_back(g.label(v));
    labels.push_back(marker);
    Graph h = induced_subgraph(g, part);
    Graph out(h.order() + 1, labels);
    for (auto [a, b] : h.edges()) out.add_edge(a, b);
    const Bitset across = want_side ? ~in_side : in_side;
    for (int i = 0; i < static_cast<int>(part.size()); ++i) {
      if ((g.neighbours(part[i]) & across).any()) out.add_edge(i, h.order());
    }
    return make_block(std::move(out));
  };
  return {build(true, marker_side), build(false, marker_rest)};
}

namespace {

// Dense index for every block vertex: originals keep their id, markers follow.
struct VertexIndex {
  int n = 0;
  std::unordered_map<BlockVertex, int> marker_index;

  int operator()(BlockVertex x) const {
    return is_marker(x) ? marker_index.at(x) : x;
  }
};

// Structural problems that make recompose/split_tree meaningless.
std::vector<Violation> structure_violations(const Decomposition& d) {
  std::vector<Violation> out;
  const int n = d.origin.order();
  std::vector<int> seen_vertex(n, 0);
  std::map<BlockVertex, int> marker_home;
  for (int b = 0; b < static_cast<int>(d.blocks.size()); ++b) {
    for (BlockVertex x : d.blocks[b].members()) {
      if (is_marker(x)) {
        if (!marker_home.emplace(x, b).second) {
          out.push_back({Violation::Kind::Structure, {b}, "marker " + std::to_string(x) + " appears twice"});
        }
      } else if (x >= n) {
        out.push_back({Violation::Kind::Structure, {b}, "vertex " + std::to_string(x) + " not in origin"});
      } else if (++seen_vertex[x] > 1) {
        out.push_back({Violation::Kind::Structure, {b}, "vertex " + std::to_string(x) + " in several blocks"});
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (seen_vertex[v] == 0) {
      out.push_back({Violation::Kind::Structure, {}, "vertex " + std::to_string(v) + " in no block"});
    }
  }
  std::set<BlockVertex> described;
  for (const auto& m : d.markers) {
    described.insert(m.id);
    const auto home = marker_home.find(m.id);
    const Marker* partner = d.find_marker(m.partner);
    if (home == marker_home.end() || home->second != m.home_block) {
      out.push_back({Violation::Kind::Structure, {m.home_block}, "marker " + std::to_string(m.id) + " not in its home block"});
    } else if (partner == nullptr || partner->partner != m.id || m.partner == m.id) {
      out.push_back({Violation::Kind::Structure, {m.home_block}, "marker " + std::to_string(m.id) + " has no mutual partner"});
    } else if (partner->home_block == m.home_block) {
      out.push_back({Violation::Kind::Structure, {m.home_block}, "marker " + std::to_string(m.id) + " partnered inside its own block"});
    }
  }
  for (const auto& [id, block] : marker_home) {
    if (!described.count(id)) {
      out.push_back({Violation::Kind::Structure, {block}, "marker " + std::to_string(id) + " has no record"});
    }
  }
  return out;
}

bool tree_shaped(const Decomposition& d) {
  const int blocks = static_cast<int>(d.blocks.size());
  if (blocks == 0) return false;
  if (static_cast<int>(d.markers.size()) != 2 * (blocks - 1)) return false;
  std::vector<std::vector<int>> adj(blocks);
  for (const auto& m : d.markers) adj[m.home_block].push_back(d.find_marker(m.partner)->home_block);
  std::vector<char> seen(blocks, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int w : adj[u]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == blocks;
}

}  // namespace

Graph recompose(const Decomposition& d) {
  if (auto problems = structure_violations(d); !problems.empty()) {
    throw Error(ErrorCode::MalformedDecomposition, problems.front().detail);
  }
  VertexIndex index;
  index.n = d.origin.order();
  for (const auto& m : d.markers) index.marker_index.emplace(m.id, index.n + static_cast<int>(index.marker_index.size()));
  const int total = index.n + static_cast<int>(index.marker_index.size());

  std::vector<Bitset> adj(total, Bitset(static_cast<std::size_t>(total)));
  for (const auto& b : d.blocks) {
    for (auto [u, v] : b.graph.edges()) {
      const int a = index(b.graph.label(u));
      const int c = index(b.graph.label(v));
      adj[a].set(c);
      adj[c].set(a);
    }
  }
  for (const auto& m : d.markers) {
    if (m.id < m.partner) continue;  // each pair once
    const int h = index(m.id);
    const int p = index(m.partner);
    const Bitset left = adj[h];
    const Bitset right = adj[p];
    for (auto x = left.find_first(); x != Bitset::npos; x = left.find_next(x)) {
      adj[x] |= right;
      adj[x].reset(h);
    }
    for (auto y = right.find_first(); y != Bitset::npos; y = right.find_next(y)) {
      adj[y] |= left;
      adj[y].reset(p);
    }
    adj[h].reset();
    adj[p].reset();
  }

  Graph g(index.n, d.origin.labels());
  for (Vertex u = 0; u < index.n; ++u) {
    for (auto v = adj[u].find_next(u); v != Bitset::npos && static_cast<int>(v) < index.n; v = adj[u].find_next(v)) {
      g.add_edge(u, static_cast<Vertex>(v));
    }
  }
  return g;
}

bool SplitTree::adjacent(int u, int v) const {
  return std::any_of(links[u].begin(), links[u].end(), [&](const Link& l) { return l.node == v; });
}

BlockVertex SplitTree::marker_towards(int u, int v) const {
  for (const auto& l : links[u]) {
    if (l.node == v) return l.marker;
  }
  throw Error(ErrorCode::NotATreeEdge, "nodes " + std::to_string(u) + " and " + std::to_string(v) + " are not adjacent");
}

bool SplitTree::is_path() const {
  return std::all_of(links.begin(), links.end(), [](const auto& l) { return l.size() <= 2; });
}

std::vector<std::pair<int, int>> SplitTree::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < size(); ++u) {
    for (const auto& l : links[u]) {
      if (u < l.node) out.emplace_back(u, l.node);
    }
  }
  return out;
}

SplitTree split_tree(const Decomposition& d) {
  if (auto problems = structure_violations(d); !problems.empty()) {
    throw Error(ErrorCode::MalformedDecomposition, problems.front().detail);
  }
  if (!tree_shaped(d)) throw Error(ErrorCode::MalformedDecomposition, "marked edges do not form a tree");
  SplitTree t;
  t.links.resize(d.blocks.size());
  for (int b = 0; b < static_cast<int>(d.blocks.size()); ++b) {
    const Block& block = d.blocks[b];
    SplitTreeNode node;
    node.block = b;
    node.kind = block.kind;
    node.centre = block.centre;
    for (BlockVertex x : block.members()) {
      if (!is_marker(x)) node.vertices.push_back(x);
    }
    std::sort(node.vertices.begin(), node.vertices.end());
    t.nodes.push_back(std::move(node));
  }
  for (const auto& m : d.markers) {
    t.links[m.home_block].push_back({d.find_marker(m.partner)->home_block, m.id});
  }
  for (auto& l : t.links) {
    std::sort(l.begin(), l.end(), [](const auto& a, const auto& b) { return a.node < b.node; });
  }
  return t;
}

VertexSet side_vertices(const SplitTree& t, int u, int v) {
  if (u < 0 || v < 0 || u >= t.size() || v >= t.size() || !t.adjacent(u, v)) {
    throw Error(ErrorCode::NotATreeEdge, "side_vertices needs a tree edge");
  }
  VertexSet out;
  std::vector<std::pair<int, int>> stack{{u, v}};
  while (!stack.empty()) {
    auto [w, from] = stack.back();
    stack.pop_back();
    out.insert(out.end(), t.nodes[w].vertices.begin(), t.nodes[w].vertices.end());
    for (const auto& l : t.links[w]) {
      if (l.node != from) stack.emplace_back(l.node, w);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool block_has_split(const Graph& g) {
  const int n = g.order();
  if (n < 4) return false;
  // Side containing local vertex 0.
  for (unsigned long mask = 1; mask < (1ul << n); mask += 2) {
    const int size = __builtin_popcountl(mask);
    if (size < 2 || n - size < 2) continue;
    Bitset side(static_cast<std::size_t>(n), mask);
    if (cutrank_of_bits(g, side) == 1) return true;
  }
  return false;
}

std::optional<std::string> kind_problem(const Block& b, bool sole_block) {
  const int n = b.size();
  if (n <= 2) {
    if (!sole_block) return "block with fewer than 3 vertices";
    return std::nullopt;
  }
  const Block actual = make_block(b.graph);
  switch (b.kind) {
    case BlockKind::Clique:
      if (actual.kind != BlockKind::Clique) return "clique block is not complete";
      break;
    case BlockKind::Star:
      if (actual.kind != BlockKind::Star) return "star block is not a star";
      if (!b.centre || b.graph.degree(b.local(*b.centre)) != n - 1) return "star centre is wrong";
      break;
    case BlockKind::Prime:
      if (actual.kind != BlockKind::Prime) return "prime block is a clique or star";
      if (n <= 16 && block_has_split(b.graph)) return "prime block has a split";
      break;
  }
  return std::nullopt;
}

}  // namespace

std::vector<Violation> validate_canonical(const Decomposition& d) {
  std::vector<Violation> out = structure_violations(d);
  if (!out.empty()) return out;
  if (!tree_shaped(d)) {
    out.push_back({Violation::Kind::NotATree, {}, "marked edges are not an isthmus matching of a connected S(D)"});
    return out;
  }
  const bool sole = d.blocks.size() == 1;
  for (int b = 0; b < static_cast<int>(d.blocks.size()); ++b) {
    if (auto problem = kind_problem(d.blocks[b], sole)) out.push_back({Violation::Kind::BlockKind, {b}, *problem});
  }
  for (const auto& m : d.markers) {
    const Marker& p = *d.find_marker(m.partner);
    if (m.id < p.id) continue;
    const Block& a = d.blocks[m.home_block];
    const Block& c = d.blocks[p.home_block];
    if (a.kind == BlockKind::Clique && c.kind == BlockKind::Clique) {
      out.push_back({Violation::Kind::AdjacentCliques, {m.home_block, p.home_block}, "neighbour clique blocks"});
    }
    if (a.kind == BlockKind::Star && c.kind == BlockKind::Star && (a.centre == m.id) != (c.centre == p.id)) {
      out.push_back({Violation::Kind::StarOrientation, {m.home_block, p.home_block},
                     "neighbour stars joined centre-to-leaf"});
    }
  }
  if (recompose(d) != d.origin) {
    out.push_back({Violation::Kind::Recompose, {}, "recomposition differs from the origin graph"});
  }
  return out;
}

namespace {

// A block vertex is named by what it stands for: an original vertex by
// itself, a marker by the original vertices beyond its marked edge.
using VertexName = std::pair<bool, VertexSet>;
using BlockName = std::pair<std::vector<VertexName>, std::vector<std::pair<VertexName, VertexName>>>;

std::vector<BlockName> decomposition_names(const Decomposition& d) {
  const SplitTree t = split_tree(d);
  auto name = [&](BlockVertex x) -> VertexName {
    if (!is_marker(x)) return {false, {x}};
    const Marker& m = *d.find_marker(x);
    const int far = d.find_marker(m.partner)->home_block;
    return {true, side_vertices(t, far, m.home_block)};
  };
  std::vector<BlockName> out;
  for (const auto& b : d.blocks) {
    BlockName bn;
    for (BlockVertex x : b.members()) bn.first.push_back(name(x));
    for (auto [u, v] : b.graph.edges()) {
      auto e = std::minmax(bn.first[u], bn.first[v]);
      bn.second.emplace_back(e.first, e.second);
    }
    std::sort(bn.first.begin(), bn.first.end());
    std::sort(bn.second.begin(), bn.second.end());
    out.push_back(std::move(bn));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool equivalent_decompositions(const Decomposition& a, const Decomposition& b) {
  if (a.origin.order() != b.origin.order()) return false;
  return decomposition_names(a) == decomposition_names(b);
}

}  // namespace lrw1
