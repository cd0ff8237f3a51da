// Command-line front end: recognize, decompose, lrw-exact, crosscheck, enumerate.
//
// Exit codes: 0 success / lrw <= 1, 1 obstruction found or input not DH,
// 2 usage or input error, 3 internal verification failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "lrw1/certificate_json.hpp"
#include "lrw1/crosscheck.hpp"
#include "lrw1/dh.hpp"
#include "lrw1/dot.hpp"
#include "lrw1/error.hpp"
#include "lrw1/graph_io.hpp"
#include "lrw1/oracle.hpp"
#include "lrw1/recognize.hpp"
#include "lrw1/split_decomposition.hpp"

namespace {

using namespace lrw1;

constexpr int kExitAccepted = 0;
constexpr int kExitRejected = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

struct InputOptions {
  std::string path = "-";
  std::string format = "auto";
};

Graph read_input(const InputOptions& in) {
  std::string text;
  if (in.path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream file(in.path, std::ios::binary);
    if (!file) throw Error(ErrorCode::Parse, "cannot open " + in.path);
    text.assign(std::istreambuf_iterator<char>(file), {});
  }
  if (in.format == "graph6") return parse_graph(text, GraphFormat::Graph6);
  if (in.format == "edgelist") return parse_graph(text, GraphFormat::EdgeList);
  return parse_graph(text);
}

void add_input(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("input", in.path, "Graph file, or - for stdin")->capture_default_str();
  cmd->add_option("--format", in.format, "Input format")
      ->check(CLI::IsMember({"auto", "edgelist", "graph6"}))
      ->capture_default_str();
}

std::string label_list(const Graph& g, const std::vector<Vertex>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? " " : "") + std::to_string(g.label(vs[i]));
  return out;
}

void write_to(const std::string& target, const std::string& text) {
  if (target == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(target);
  if (!out) throw Error(ErrorCode::Parse, "cannot write " + target);
  out << text;
}

int cmd_recognize(const InputOptions& in, bool json, bool verify) {
  const Graph g = read_input(in);
  const Certificate c = recognize(g);
  if (verify) {
    if (auto verdict = verify_certificate(g, c); !verdict) {
      std::cerr << "error: certificate failed verification: " << verdict.reason << "\n";
      return kExitInternal;
    }
  }
  if (json) {
    std::cout << to_json(g, c).dump() << "\n";
  } else if (const auto* o = std::get_if<OrderingCertificate>(&c)) {
    std::cout << "lrw <= 1\nordering: " << label_list(g, o->order) << "\n";
  } else {
    const auto& ob = std::get<ObstructionCertificate>(c);
    std::cout << "lrw >= 2\nobstruction: " << describe(ob) << "\nvertices: " << label_list(g, ob.vertices) << "\n";
  }
  return accepted(c) ? kExitAccepted : kExitRejected;
}

int cmd_decompose(const InputOptions& in, const std::string& dot_sd, const std::string& dot_tree) {
  const Graph g = read_input(in);
  if (!is_connected(g)) {
    std::cerr << "error: decompose needs a connected graph\n";
    return kExitInput;
  }
  if (!is_distance_hereditary(g)) {
    const VertexSet s = non_dh_obstruction(g);
    const auto cls = classify_non_dh(induced_subgraph(g, s));
    std::cout << "not distance-hereditary\nobstruction: " << (cls ? std::string(to_string(cls->family)) : "?")
              << "\nvertices: " << label_list(g, s) << "\n";
    return kExitRejected;
  }
  const Decomposition d = canonical_decomposition_dh(g);
  const SplitTree t = split_tree(d);
  std::cout << block_listing(t, d);
  if (!dot_sd.empty()) write_to(dot_sd, decomposition_to_dot(d));
  if (!dot_tree.empty()) write_to(dot_tree, split_tree_to_dot(t, d));
  return kExitAccepted;
}

int cmd_lrw_exact(const InputOptions& in, int max_n) {
  const Graph g = read_input(in);
  if (g.order() > std::min(max_n, oracle::kMaxLrwOrder)) {
    std::cerr << "error: " << g.order() << " vertices exceeds the limit of " << std::min(max_n, oracle::kMaxLrwOrder)
              << "\n";
    return kExitInput;
  }
  const auto r = oracle::brute_lrw_with_ordering(g);
  std::cout << "lrw: " << r.width << "\nordering: " << label_list(g, r.ordering) << "\n";
  return kExitAccepted;
}

int cmd_crosscheck(int max_n, std::string fixtures) {
  if (fixtures.empty()) fixtures = oracle::default_fixture_dir().string();
  CrosscheckReport report;
  try {
    report = crosscheck(fixtures, max_n, [](const Graph& g) { return recognize(g); });
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  for (const auto& row : report.rows) {
    std::cout << row.connected << " connected graphs on " << row.n << " vertices checked (" << row.accepted
              << " with lrw <= 1)\n";
  }
  for (const auto& line : report.disagreements) std::cout << "DISAGREEMENT " << line << "\n";
  return report.ok() ? kExitAccepted : kExitRejected;
}

int cmd_enumerate(int max_n, const std::string& out) {
  for (int n = 1; n <= max_n; ++n) {
    const auto graphs = oracle::enumerate_graphs(n);
    oracle::write_fixture(out, n, graphs);
    std::cout << graphs.size() << " graphs on " << n << " vertices\n";
  }
  return kExitAccepted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear rank-width 1 recognition with certificates"};
  app.require_subcommand(1);

  InputOptions in;
  bool json = false;
  bool verify = false;
  auto* recognize_cmd = app.add_subcommand("recognize", "Decide lrw <= 1 and print a certificate");
  add_input(recognize_cmd, in);
  recognize_cmd->add_flag("--json", json, "Print the certificate as JSON");
  recognize_cmd->add_flag("--verify", verify, "Re-check the certificate before printing it");

  std::string dot_sd;
  std::string dot_tree;
  auto* decompose_cmd = app.add_subcommand("decompose", "Canonical split decomposition of a connected DH graph");
  add_input(decompose_cmd, in);
  decompose_cmd->add_option("--dot-sd", dot_sd, "Write S(D) as DOT to this file (- for stdout)");
  decompose_cmd->add_option("--dot-tree", dot_tree, "Write the split tree as DOT to this file (- for stdout)");

  int exact_max_n = oracle::kMaxLrwOrder;
  auto* exact_cmd = app.add_subcommand("lrw-exact", "Exact linear rank-width by brute force");
  add_input(exact_cmd, in);
  exact_cmd->add_option("--max-n", exact_max_n, "Refuse larger graphs")->capture_default_str();

  int check_max_n = 7;
  std::string fixtures;
  auto* check_cmd = app.add_subcommand("crosscheck", "Compare the recognizer with the exact oracle on all small graphs");
  check_cmd->add_option("--max-n", check_max_n, "Largest vertex count")
      ->check(CLI::Range(1, oracle::kMaxLrwOrder))
      ->capture_default_str();
  check_cmd->add_option("--fixtures", fixtures, "Fixture directory (default: $LRW1_FIXTURES or the built-in one)");

  int enum_max_n = 7;
  std::string out_dir = "fixtures";
  auto* enum_cmd = app.add_subcommand("enumerate", "Write graph6 fixtures of all graphs up to isomorphism");
  enum_cmd->add_option("--max-n", enum_max_n, "Largest vertex count")->check(CLI::Range(1, 8))->capture_default_str();
  enum_cmd->add_option("--out", out_dir, "Output directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*recognize_cmd) return cmd_recognize(in, json, verify);
    if (*decompose_cmd) return cmd_decompose(in, dot_sd, dot_tree);
    if (*exact_cmd) return cmd_lrw_exact(in, exact_max_n);
    if (*check_cmd) return cmd_crosscheck(check_max_n, fixtures);
    if (*enum_cmd) return cmd_enumerate(enum_max_n, out_dir);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::InternalInvariantViolation ? kExitInternal : kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInput;
}
