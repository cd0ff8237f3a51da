#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "lrw1/recognize.hpp"

namespace lrw1 {

using Recognizer = std::function<Certificate(const Graph&)>;

struct CrosscheckRow {
  int n = 0;
  std::size_t graphs = 0;
  std::size_t connected = 0;
  std::size_t accepted = 0;
};

struct CrosscheckReport {
  std::vector<CrosscheckRow> rows;
  std::vector<std::string> disagreements;  // "graph6: reason"

  bool ok() const noexcept { return disagreements.empty(); }
};

/// Runs `recognize` on every connected fixture graph with 1..max_n vertices
/// and compares with brute_lrw <= 1; each certificate must also verify.
/// Throws Parse when a fixture file is missing or unreadable.
CrosscheckReport crosscheck(const std::filesystem::path& fixtures, int max_n, const Recognizer& recognize);

}  // namespace lrw1
