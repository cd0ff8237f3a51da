#include "lrw1/dot.hpp"

#include <sstream>

namespace lrw1 {

namespace {

std::string name(const Decomposition& d, BlockVertex x) {
  return is_marker(x) ? "m" + std::to_string(-x) : std::to_string(d.origin.label(x));
}

std::string node_id(const Decomposition& d, BlockVertex x) { return "\"" + name(d, x) + "\""; }

std::string centre_text(const Decomposition& d, const SplitTreeNode& node) {
  if (node.kind != BlockKind::Star) return "";
  return " centre=" + name(d, *node.centre);
}

std::string vertices_text(const Decomposition& d, const VertexSet& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? "," : "") + std::to_string(d.origin.label(vs[i]));
  return out + "}";
}

}  // namespace

std::string decomposition_to_dot(const Decomposition& d) {
  std::ostringstream out;
  out << "graph S {\n";
  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    const Block& block = d.blocks[b];
    out << "  subgraph cluster_" << b << " {\n";
    out << "    label=\"" << b << ": " << to_string(block.kind) << "\";\n";
    for (BlockVertex x : block.members()) {
      out << "    " << node_id(d, x) << (is_marker(x) ? " [shape=box]" : "") << ";\n";
    }
    for (const auto& [u, v] : block.graph.edges()) {
      out << "    " << node_id(d, block.members()[u]) << " -- " << node_id(d, block.members()[v]) << ";\n";
    }
    out << "  }\n";
  }
  for (const Marker& m : d.markers) {
    if (m.id > m.partner) out << "  " << node_id(d, m.id) << " -- " << node_id(d, m.partner) << " [style=dashed];\n";
  }
  out << "}\n";
  return out.str();
}

std::string split_tree_to_dot(const SplitTree& t, const Decomposition& d) {
  std::ostringstream out;
  out << "graph T {\n";
  for (int u = 0; u < t.size(); ++u) {
    const auto& node = t.nodes[u];
    out << "  n" << u << " [label=\"" << to_string(node.kind) << centre_text(d, node) << "\\n"
        << vertices_text(d, node.vertices) << "\"];\n";
  }
  for (const auto& [u, v] : t.edges()) out << "  n" << u << " -- n" << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string block_listing(const SplitTree& t, const Decomposition& d) {
  std::ostringstream out;
  for (int u = 0; u < t.size(); ++u) {
    const auto& node = t.nodes[u];
    out << "block " << u << ": " << to_string(node.kind) << centre_text(d, node) << " V=" << vertices_text(d, node.vertices)
        << "\n";
  }
  return out.str();
}

}  // namespace lrw1
