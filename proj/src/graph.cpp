#include "lrw1/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "lrw1/error.hpp"

namespace lrw1 {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::InvalidVertex: return "InvalidVertex";
    case ErrorCode::NotAnEdge: return "NotAnEdge";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::AlreadyDH: return "AlreadyDH";
    case ErrorCode::NotASplit: return "NotASplit";
    case ErrorCode::MalformedDecomposition: return "MalformedDecomposition";
    case ErrorCode::NotDH: return "NotDH";
    case ErrorCode::InvalidSequence: return "InvalidSequence";
    case ErrorCode::NotATreeEdge: return "NotATreeEdge";
    case ErrorCode::NotAPath: return "NotAPath";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::InternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorCode::CapExceeded: return "CapExceeded";
  }
  return "Error";
}

Graph::Graph(int n) : adj_(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n))), labels_(n) {
  std::iota(labels_.begin(), labels_.end(), 0);
}

Graph::Graph(int n, std::vector<int> labels)
    : adj_(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n))), labels_(std::move(labels)) {
  if (static_cast<int>(labels_.size()) != n) {
    throw Error(ErrorCode::InvalidVertex, "label table size does not match vertex count");
  }
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return twice / 2;
}

std::vector<Vertex> Graph::neighbour_list(Vertex v) const {
  return to_vertex_set(adj_[v]);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order(); ++u) {
    for (auto v = adj_[u].find_next(u); v != Bitset::npos; v = adj_[u].find_next(v)) {
      out.emplace_back(u, static_cast<Vertex>(v));
    }
  }
  return out;
}

void Graph::check_pair(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) {
    throw Error(ErrorCode::InvalidVertex, "vertex out of range");
  }
  if (u == v) throw Error(ErrorCode::InvalidVertex, "loops are not allowed");
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  adj_[u].set(v);
  adj_[v].set(u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  adj_[u].reset(v);
  adj_[v].reset(u);
}

void Graph::toggle_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  adj_[u].flip(v);
  adj_[v].flip(u);
}

void check_vertex_set(const Graph& g, std::span<const Vertex> set) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (!g.contains(set[i])) {
      throw Error(ErrorCode::InvalidVertex, "vertex " + std::to_string(set[i]) + " not in graph");
    }
    if (i > 0 && set[i - 1] >= set[i]) {
      throw Error(ErrorCode::InvalidVertex, "vertex set must be sorted and duplicate-free");
    }
  }
}

VertexSet make_vertex_set(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

Bitset to_bitset(int n, std::span<const Vertex> set) {
  Bitset bits(static_cast<std::size_t>(n));
  for (Vertex v : set) bits.set(v);
  return bits;
}

VertexSet to_vertex_set(const Bitset& bits) {
  VertexSet out;
  out.reserve(bits.count());
  for (auto v = bits.find_first(); v != Bitset::npos; v = bits.find_next(v)) {
    out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> set) {
  check_vertex_set(g, set);
  const int k = static_cast<int>(set.size());
  std::vector<int> labels(k);
  for (int i = 0; i < k; ++i) labels[i] = g.label(set[i]);
  Graph h(k, std::move(labels));
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (g.adjacent(set[i], set[j])) h.add_edge(i, j);
    }
  }
  return h;
}

Graph local_complement(const Graph& g, Vertex x) {
  if (!g.contains(x)) throw Error(ErrorCode::InvalidVertex, "local complementation at missing vertex");
  Graph h = g;
  const VertexSet nbrs = g.neighbour_list(x);
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) h.toggle_edge(nbrs[i], nbrs[j]);
  }
  return h;
}

Graph pivot(const Graph& g, Vertex x, Vertex y) {
  if (!g.contains(x) || !g.contains(y)) throw Error(ErrorCode::InvalidVertex, "pivot on missing vertex");
  if (x == y || !g.adjacent(x, y)) throw Error(ErrorCode::NotAnEdge, "pivot requires an edge");
  return local_complement(local_complement(local_complement(g, x), y), x);
}

std::vector<VertexSet> connected_components(const Graph& g) {
  const int n = g.order();
  std::vector<VertexSet> out;
  std::vector<char> seen(n, 0);
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    VertexSet comp{s};
    seen[s] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      const Bitset& nb = g.neighbours(comp[head]);
      for (auto v = nb.find_first(); v != Bitset::npos; v = nb.find_next(v)) {
        if (!seen[v]) {
          seen[v] = 1;
          comp.push_back(static_cast<Vertex>(v));
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) {
  return connected_components(g).size() <= 1;
}

namespace {

class IsoSearch {
 public:
  IsoSearch(const Graph& g, const Graph& h) : g_(g), h_(h), map_(g.order(), -1), used_(h.order(), 0) {
    order_.resize(g.order());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  }

  bool run() { return extend(0); }

 private:
  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex x = order_[depth];
    for (Vertex y = 0; y < h_.order(); ++y) {
      if (used_[y] || h_.degree(y) != g_.degree(x)) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const Vertex px = order_[d];
        ok = g_.adjacent(x, px) == h_.adjacent(y, map_[px]);
      }
      if (!ok) continue;
      map_[x] = y;
      used_[y] = 1;
      if (extend(depth + 1)) return true;
      used_[y] = 0;
      map_[x] = -1;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  std::vector<char> used_;
};

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> seq(g.order());
  for (Vertex v = 0; v < g.order(); ++v) seq[v] = g.degree(v);
  std::sort(seq.begin(), seq.end());
  return seq;
}

}  // namespace

bool is_isomorphic_small(const Graph& g, const Graph& h) {
  if (g.order() > kMaxIsomorphismOrder || h.order() > kMaxIsomorphismOrder) {
    throw Error(ErrorCode::TooLarge, "isomorphism test limited to 10 vertices");
  }
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  if (degree_sequence(g) != degree_sequence(h)) return false;
  return IsoSearch(g, h).run();
}

Graph relabelled(const Graph& g) {
  Graph h(g.order());
  for (auto [u, v] : g.edges()) h.add_edge(u, v);
  return h;
}

namespace graphs {

Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle(int n) {
  Graph g = path(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

Graph complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

Graph star(int leaves) {
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

Graph net() {
  const Edge e[] = {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}};
  return Graph::from_edges(6, e);
}

Graph octahedron() {
  Graph g = complete(6);
  g.remove_edge(0, 1);
  g.remove_edge(2, 3);
  g.remove_edge(4, 5);
  return g;
}

Graph house() {
  const Edge e[] = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 4}};
  return Graph::from_edges(5, e);
}

Graph gem() {
  const Edge e[] = {{0, 1}, {1, 2}, {2, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3}};
  return Graph::from_edges(5, e);
}

Graph domino() {
  const Edge e[] = {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 3}, {1, 4}, {2, 5}};
  return Graph::from_edges(6, e);
}

Graph spider(int leg) {
  Graph g(1 + 3 * leg);
  for (int l = 0; l < 3; ++l) {
    Vertex prev = 0;
    for (int i = 0; i < leg; ++i) {
      const Vertex v = 1 + l * leg + i;
      g.add_edge(prev, v);
      prev = v;
    }
  }
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(a.order() + u, a.order() + v);
  return g;
}

}  // namespace graphs

}  // namespace lrw1
