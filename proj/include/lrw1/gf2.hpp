#pragma once

#include <span>
#include <vector>

#include "lrw1/graph.hpp"

namespace lrw1 {

/// Matrix over GF(2) with vertex labels on rows and columns. Each row is a
/// bit-packed Bitset of width `cols()`.
struct Gf2Matrix {
  std::vector<Vertex> row_labels;
  std::vector<Vertex> col_labels;
  std::vector<Bitset> rows;

  Gf2Matrix() = default;
  Gf2Matrix(std::vector<Vertex> row_labels, std::vector<Vertex> col_labels);

  int row_count() const noexcept { return static_cast<int>(row_labels.size()); }
  int col_count() const noexcept { return static_cast<int>(col_labels.size()); }
  bool at(int r, int c) const { return rows[r].test(c); }
  void set(int r, int c, bool value = true) { rows[r].set(c, value); }
};

Gf2Matrix transpose(const Gf2Matrix& m);

/// Row rank by elimination against a basis keyed on each row's lowest set bit.
/// Rows are taken by value: they are the scratch space.
int rank_of_rows(std::vector<Bitset> rows);

int rank(const Gf2Matrix& m);

/// A_G[X, V \ X] with both label lists ascending.
Gf2Matrix cut_matrix(const Graph& g, std::span<const Vertex> side);

int cutrank_of_cut(const Graph& g, std::span<const Vertex> side);

/// Same quantity for a side given as a bitset over V(g); no validation.
int cutrank_of_bits(const Graph& g, const Bitset& side);

/// Max over prefixes of the cutrank; throws NotAPermutation.
int cutrank_of_ordering(const Graph& g, std::span<const Vertex> order);

/// Per-prefix cut ranks; entry i is the rank of the cut after i+1 vertices.
std::vector<int> prefix_cutranks(const Graph& g, std::span<const Vertex> order);

}  // namespace lrw1
