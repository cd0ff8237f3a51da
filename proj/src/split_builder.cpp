// Incremental construction of the canonical split decomposition of a
// distance-hereditary graph from a pruning sequence, plus the local
// normalisation rules shared with hand-built decompositions.

#include <algorithm>
#include <map>
#include <unordered_map>

#include "lrw1/error.hpp"
#include "lrw1/split_decomposition.hpp"

namespace lrw1 {

namespace {

struct WorkBlock {
  BlockKind kind = BlockKind::Clique;
  std::vector<BlockVertex> members;
  std::optional<BlockVertex> centre;
  Graph prime;  // local structure of prime blocks, aligned with `members`
  bool alive = true;
};

class Workspace {
 public:
  explicit Workspace(Graph origin) : origin_(std::move(origin)) {}

  static Workspace from(const Decomposition& d) {
    Workspace w(d.origin);
    for (int b = 0; b < static_cast<int>(d.blocks.size()); ++b) {
      const Block& block = d.blocks[b];
      WorkBlock wb{block.kind, block.members(), block.centre, {}, true};
      if (block.kind == BlockKind::Prime) wb.prime = block.graph;
      w.blocks_.push_back(std::move(wb));
      for (BlockVertex x : block.members()) w.home_[x] = b;
    }
    for (const auto& m : d.markers) {
      w.partner_[m.id] = m.partner;
      w.next_marker_ = std::min(w.next_marker_, m.id - 1);
    }
    return w;
  }

  void start(Vertex v) { add_block({BlockKind::Clique, {v}, std::nullopt, {}, true}); }

  void insert(Vertex x, PruneKind kind, Vertex y) {
    const int b = home_.at(y);
    WorkBlock& block = blocks_[b];
    if (alive_count() == 1 && block.members.size() <= 2) {
      insert_small(b, x, kind, y);
      return;
    }
    const bool star = block.kind == BlockKind::Star;
    switch (kind) {
      case PruneKind::TrueTwin:
        if (block.kind == BlockKind::Clique) return add_member(b, x);
        return split_off(b, y, x, BlockKind::Clique, false);
      case PruneKind::Pendant:
        if (star && block.centre == y) return add_member(b, x);
        return split_off(b, y, x, BlockKind::Star, false);
      case PruneKind::FalseTwin:
        if (star && block.centre != y) return add_member(b, x);
        return split_off(b, y, x, BlockKind::Star, true);
    }
  }

  void normalize() {
    while (merge_cliques() || merge_stars() || dissolve_small()) {
    }
  }

  Decomposition finish() const {
    Decomposition d;
    d.origin = origin_;
    std::vector<int> index(blocks_.size(), -1);
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      const WorkBlock& wb = blocks_[b];
      if (!wb.alive) continue;
      index[b] = static_cast<int>(d.blocks.size());
      if (wb.kind == BlockKind::Prime) {
        Graph g(static_cast<int>(wb.members.size()), wb.members);
        for (auto [u, v] : wb.prime.edges()) g.add_edge(u, v);
        d.blocks.push_back(make_block(std::move(g)));
      } else if (wb.members.size() <= 2) {
        d.blocks.push_back(make_block(wb.members, BlockKind::Clique));
      } else {
        d.blocks.push_back(make_block(wb.members, wb.kind, wb.centre));
      }
    }
    for (const auto& [id, partner] : partner_) {
      d.markers.push_back({id, index[home_.at(id)], partner});
    }
    std::sort(d.markers.begin(), d.markers.end(), [](const Marker& a, const Marker& b) { return a.id > b.id; });
    return d;
  }

 private:
  int alive_count() const {
    return static_cast<int>(std::count_if(blocks_.begin(), blocks_.end(), [](const auto& b) { return b.alive; }));
  }

  int add_block(WorkBlock block) {
    const int b = static_cast<int>(blocks_.size());
    for (BlockVertex x : block.members) home_[x] = b;
    blocks_.push_back(std::move(block));
    return b;
  }

  void add_member(int b, BlockVertex x) {
    blocks_[b].members.push_back(x);
    home_[x] = b;
  }

  void replace_member(int b, BlockVertex old_member, BlockVertex new_member) {
    WorkBlock& block = blocks_[b];
    std::replace(block.members.begin(), block.members.end(), old_member, new_member);
    if (block.centre == old_member) block.centre = new_member;
    home_[new_member] = b;
  }

  void remove_member(int b, BlockVertex x) {
    auto& m = blocks_[b].members;
    m.erase(std::remove(m.begin(), m.end(), x), m.end());
    home_.erase(x);
  }

  // The whole graph is K1 or K2 and lives in a single block.
  void insert_small(int b, Vertex x, PruneKind kind, Vertex y) {
    WorkBlock& block = blocks_[b];
    if (block.members.size() == 1) {
      if (kind == PruneKind::FalseTwin) throw Error(ErrorCode::InvalidSequence, "false twin of an isolated vertex");
      return add_member(b, x);
    }
    const Vertex other = block.members[0] == y ? block.members[1] : block.members[0];
    switch (kind) {
      case PruneKind::TrueTwin: block.kind = BlockKind::Clique; block.centre.reset(); break;
      case PruneKind::Pendant: block.kind = BlockKind::Star; block.centre = y; break;
      case PruneKind::FalseTwin: block.kind = BlockKind::Star; block.centre = other; break;
    }
    add_member(b, x);
  }

  // y's slot in block b becomes a marker whose partner sits in a new
  // three-vertex block {partner, y, x}.
  void split_off(int b, Vertex y, Vertex x, BlockKind kind, bool marker_centre) {
    const BlockVertex m = next_marker_--;
    const BlockVertex p = next_marker_--;
    replace_member(b, y, m);
    partner_[m] = p;
    partner_[p] = m;
    std::optional<BlockVertex> centre;
    if (kind == BlockKind::Star) centre = marker_centre ? p : y;
    add_block({kind, {p, y, x}, centre, {}, true});
  }

  // Marker pairs, each once, in creation order.
  std::vector<std::pair<BlockVertex, BlockVertex>> pairs() const {
    std::vector<std::pair<BlockVertex, BlockVertex>> out;
    for (const auto& [m, p] : partner_) {
      if (m > p) out.emplace_back(m, p);
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
  }

  void drop_pair(BlockVertex m, BlockVertex p) {
    partner_.erase(m);
    partner_.erase(p);
  }

  // Moves every member of `from` except `skip` into `into`.
  void absorb(int into, int from, BlockVertex skip) {
    for (BlockVertex x : blocks_[from].members) {
      if (x != skip) add_member(into, x);
    }
    blocks_[from].alive = false;
    blocks_[from].members.clear();
  }

  bool merge_cliques() {
    for (auto [m, p] : pairs()) {
      const int a = home_.at(m);
      const int c = home_.at(p);
      if (blocks_[a].kind == BlockKind::Clique && blocks_[c].kind == BlockKind::Clique) {
        remove_member(a, m);
        home_.erase(p);
        absorb(a, c, p);
        drop_pair(m, p);
        return true;
      }
    }
    return false;
  }

  bool merge_stars() {
    for (auto [m, p] : pairs()) {
      int a = home_.at(m);
      int c = home_.at(p);
      if (blocks_[a].kind != BlockKind::Star || blocks_[c].kind != BlockKind::Star) continue;
      const bool m_centre = blocks_[a].centre == m;
      const bool p_centre = blocks_[c].centre == p;
      if (m_centre == p_centre) continue;
      // Keep the block whose marker is a leaf; the other's leaves hang off its centre.
      BlockVertex leaf_marker = p;
      BlockVertex centre_marker = m;
      if (p_centre) {
        std::swap(a, c);
        leaf_marker = m;
        centre_marker = p;
      }
      remove_member(c, leaf_marker);
      home_.erase(centre_marker);
      absorb(c, a, centre_marker);
      drop_pair(m, p);
      return true;
    }
    return false;
  }

  bool dissolve_small() {
    if (alive_count() <= 1) return false;
    for (int b = 0; b < static_cast<int>(blocks_.size()); ++b) {
      WorkBlock& block = blocks_[b];
      if (!block.alive || block.members.size() != 2) continue;
      const auto it = std::find_if(block.members.begin(), block.members.end(), is_marker);
      if (it == block.members.end()) continue;
      const BlockVertex m = *it;
      const BlockVertex keep = block.members[0] == m ? block.members[1] : block.members[0];
      const BlockVertex p = partner_.at(m);
      const int target = home_.at(p);
      drop_pair(m, p);
      home_.erase(m);
      replace_member(target, p, keep);
      home_.erase(p);
      home_[keep] = target;
      block.alive = false;
      block.members.clear();
      return true;
    }
    return false;
  }

  Graph origin_;
  std::vector<WorkBlock> blocks_;
  std::unordered_map<BlockVertex, int> home_;
  std::unordered_map<BlockVertex, BlockVertex> partner_;
  BlockVertex next_marker_ = -1;
};

void check_step(const Graph& g, const Bitset& present, const PruningStep& step) {
  const Vertex x = step.removed;
  const Vertex y = step.partner;
  if (!g.contains(x) || !g.contains(y) || present.test(x) || !present.test(y)) {
    throw Error(ErrorCode::InvalidSequence, "step names an unavailable vertex");
  }
  const Bitset nx = g.neighbours(x) & present;
  Bitset ny = g.neighbours(y) & present;
  bool ok = false;
  switch (step.kind) {
    case PruneKind::Pendant:
      ok = nx.count() == 1 && nx.test(y);
      break;
    case PruneKind::TrueTwin:
      ny.set(y);
      ok = nx == ny;
      break;
    case PruneKind::FalseTwin:
      ok = nx == ny && !g.adjacent(x, y);
      break;
  }
  if (!ok) {
    throw Error(ErrorCode::InvalidSequence, "step " + std::to_string(x) + " " + std::string(to_string(step.kind)) +
                                                " " + std::to_string(y) + " does not hold");
  }
}

}  // namespace

Decomposition canonical_decomposition_dh(const Graph& g, const PruningSequence& seq) {
  const int n = g.order();
  if (n == 0) throw Error(ErrorCode::NotDH, "empty graph");
  if (static_cast<int>(seq.steps.size()) != n - 1 || !g.contains(seq.last)) {
    throw Error(ErrorCode::InvalidSequence, "sequence does not cover the graph");
  }
  Workspace w(g);
  Bitset present(static_cast<std::size_t>(n));
  present.set(seq.last);
  w.start(seq.last);
  for (auto it = seq.steps.rbegin(); it != seq.steps.rend(); ++it) {
    check_step(g, present, *it);
    present.set(it->removed);
    w.insert(it->removed, it->kind, it->partner);
    w.normalize();
  }
  return w.finish();
}

Decomposition canonical_decomposition_dh(const Graph& g) {
  if (g.empty() || !is_connected(g)) throw Error(ErrorCode::NotDH, "graph must be connected and non-empty");
  const auto seq = pruning_sequence(g);
  if (!seq) throw Error(ErrorCode::NotDH, "graph is not distance-hereditary");
  return canonical_decomposition_dh(g, *seq);
}

Decomposition normalize(const Decomposition& d) {
  split_tree(d);  // throws MalformedDecomposition on broken structure
  Workspace w = Workspace::from(d);
  w.normalize();
  return w.finish();
}

}  // namespace lrw1
