#pragma once

#include <string>

#include "lrw1/split_decomposition.hpp"

namespace lrw1 {

/// S(D): one cluster per block, solid edges inside blocks, marked edges
/// dashed. Graph vertices are named by their origin labels, markers m<k>.
std::string decomposition_to_dot(const Decomposition& d);

/// T_G with node labels "kind centre V(u)".
std::string split_tree_to_dot(const SplitTree& t, const Decomposition& d);

/// One line per block: index, kind, centre and V(u).
std::string block_listing(const SplitTree& t, const Decomposition& d);

}  // namespace lrw1
