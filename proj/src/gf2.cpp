#include "lrw1/gf2.hpp"

#include <algorithm>

#include "lrw1/error.hpp"

namespace lrw1 {

Gf2Matrix::Gf2Matrix(std::vector<Vertex> rl, std::vector<Vertex> cl)
    : row_labels(std::move(rl)), col_labels(std::move(cl)) {
  rows.assign(row_labels.size(), Bitset(col_labels.size()));
}

Gf2Matrix transpose(const Gf2Matrix& m) {
  Gf2Matrix t(m.col_labels, m.row_labels);
  for (int r = 0; r < m.row_count(); ++r) {
    for (auto c = m.rows[r].find_first(); c != Bitset::npos; c = m.rows[r].find_next(c)) {
      t.set(static_cast<int>(c), r);
    }
  }
  return t;
}

int rank_of_rows(std::vector<Bitset> rows) {
  if (rows.empty()) return 0;
  // basis[p] holds a reduced row whose lowest set bit is p.
  std::vector<int> basis_at(rows.front().size(), -1);
  std::vector<Bitset> basis;
  for (auto& row : rows) {
    for (auto p = row.find_first(); p != Bitset::npos; p = row.find_first()) {
      if (basis_at[p] < 0) {
        basis_at[p] = static_cast<int>(basis.size());
        basis.push_back(std::move(row));
        break;
      }
      row ^= basis[basis_at[p]];
    }
  }
  return static_cast<int>(basis.size());
}

int rank(const Gf2Matrix& m) {
  return rank_of_rows(m.rows);
}

Gf2Matrix cut_matrix(const Graph& g, std::span<const Vertex> side) {
  check_vertex_set(g, side);
  const Bitset in_side = to_bitset(g.order(), side);
  std::vector<Vertex> cols;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!in_side.test(v)) cols.push_back(v);
  }
  Gf2Matrix m(std::vector<Vertex>(side.begin(), side.end()), cols);
  for (int r = 0; r < m.row_count(); ++r) {
    for (int c = 0; c < m.col_count(); ++c) {
      if (g.adjacent(m.row_labels[r], cols[c])) m.set(r, c);
    }
  }
  return m;
}

int cutrank_of_bits(const Graph& g, const Bitset& side) {
  // Rows keep full width; masking by the complement leaves the rank unchanged.
  const Bitset other = ~side;
  std::vector<Bitset> rows;
  rows.reserve(side.count());
  for (auto x = side.find_first(); x != Bitset::npos; x = side.find_next(x)) {
    Bitset row = g.neighbours(static_cast<Vertex>(x)) & other;
    if (row.any()) rows.push_back(std::move(row));
  }
  return rank_of_rows(std::move(rows));
}

int cutrank_of_cut(const Graph& g, std::span<const Vertex> side) {
  check_vertex_set(g, side);
  return cutrank_of_bits(g, to_bitset(g.order(), side));
}

std::vector<int> prefix_cutranks(const Graph& g, std::span<const Vertex> order) {
  const int n = g.order();
  if (static_cast<int>(order.size()) != n) {
    throw Error(ErrorCode::NotAPermutation, "ordering length differs from vertex count");
  }
  Bitset prefix(static_cast<std::size_t>(n));
  std::vector<int> out;
  out.reserve(order.size());
  for (Vertex v : order) {
    if (!g.contains(v) || prefix.test(v)) {
      throw Error(ErrorCode::NotAPermutation, "ordering repeats or omits vertex " + std::to_string(v));
    }
    prefix.set(v);
    out.push_back(cutrank_of_bits(g, prefix));
  }
  return out;
}

int cutrank_of_ordering(const Graph& g, std::span<const Vertex> order) {
  const auto ranks = prefix_cutranks(g, order);
  return ranks.empty() ? 0 : *std::max_element(ranks.begin(), ranks.end());
}

}  // namespace lrw1
