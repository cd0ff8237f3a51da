#include "lrw1/graph_io.hpp"

#include <charconv>
#include <cstdint>
#include <set>
#include <sstream>
#include <vector>

#include "lrw1/error.hpp"

namespace lrw1 {

namespace {

constexpr unsigned char kG6Low = 63;
constexpr unsigned char kG6High = 126;
constexpr std::string_view kG6Header = ">>graph6<<";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Parses whitespace-separated non-negative integers; false on any junk.
bool parse_ints(std::string_view line, std::vector<long long>& out) {
  out.clear();
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
    if (ec != std::errc() || ptr != line.data() + j || value < 0) return false;
    out.push_back(value);
    i = j;
  }
  return true;
}

Graph parse_edge_list(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  long long seen_edges = 0;
  std::set<std::pair<int, int>> edges;
  std::vector<long long> ints;

  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(pos, end - pos));
    ++line_no;
    pos = end + 1;
    if (line.empty() || line.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (!parse_ints(line, ints) || ints.size() != 2) {
      throw ParseError(line_no, "expected two non-negative integers");
    }
    if (!have_header) {
      n = ints[0];
      m = ints[1];
      if (n > (1 << 20)) throw ParseError(line_no, "vertex count too large");
      if (m > n * (n - 1) / 2) throw ParseError(line_no, "more edges than a simple graph allows");
      have_header = true;
    } else {
      const long long u = ints[0];
      const long long v = ints[1];
      if (u >= n || v >= n) throw ParseError(line_no, "vertex id out of range");
      if (u == v) throw ParseError(line_no, "loop");
      if (++seen_edges > m) throw ParseError(line_no, "more edge lines than declared");
      const std::pair<int, int> key{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
      if (!edges.insert(key).second) throw ParseError(line_no, "duplicate edge");
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw ParseError(line_no, "missing `n m` header");
  if (seen_edges != m) throw ParseError(line_no, "fewer edge lines than declared");

  Graph g(static_cast<int>(n));
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph parse_g6(std::string_view text) {
  std::size_t offset = 0;
  if (text.starts_with(kG6Header)) offset = kG6Header.size();
  std::string_view body = text.substr(offset);
  while (!body.empty() && (body.back() == '\n' || body.back() == '\r' || body.back() == ' ')) {
    body.remove_suffix(1);
  }
  auto byte = [&](std::size_t i) -> int {
    if (i >= body.size()) throw ParseError(offset + i, "unexpected end of graph6 data");
    const auto c = static_cast<unsigned char>(body[i]);
    if (c < kG6Low || c > kG6High) throw ParseError(offset + i, "byte outside graph6 alphabet");
    return c - kG6Low;
  };

  std::size_t i = 0;
  long long n = 0;
  if (byte(0) < 63) {
    n = byte(0);
    i = 1;
  } else if (byte(1) < 63) {
    n = (static_cast<long long>(byte(1)) << 12) | (byte(2) << 6) | byte(3);
    i = 4;
  } else {
    n = 0;
    for (std::size_t k = 2; k < 8; ++k) n = (n << 6) | byte(k);
    i = 8;
  }
  if (n > (1 << 20)) throw ParseError(offset, "vertex count too large");

  const std::uint64_t bits = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1) / 2;
  const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  if (body.size() != i + need) {
    throw ParseError(offset + std::min(body.size(), i + need), "graph6 length does not match vertex count");
  }

  Graph g(static_cast<int>(n));
  std::uint64_t k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const int chunk = byte(i + k / 6);
      if (chunk & (1 << (5 - k % 6))) g.add_edge(u, v);
    }
  }
  // Padding bits must be zero.
  for (; k < need * 6; ++k) {
    if (byte(i + k / 6) & (1 << (5 - k % 6))) throw ParseError(offset + i + k / 6, "non-zero padding bits");
  }
  return g;
}

}  // namespace

GraphFormat detect_format(std::string_view text) {
  for (char ch : text) {
    const auto c = static_cast<unsigned char>(ch);
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    if (c == '>' || (c >= kG6Low && c <= kG6High)) return GraphFormat::Graph6;
    return GraphFormat::EdgeList;
  }
  return GraphFormat::EdgeList;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::Graph6 ? parse_g6(text) : parse_edge_list(text);
}

Graph parse_graph(std::string_view text) {
  return parse_graph(text, detect_format(text));
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  const auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

std::string to_graph6(const Graph& g) {
  const std::uint64_t n = static_cast<std::uint64_t>(g.order());
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kG6Low));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(kG6High));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kG6Low));
  } else {
    out.push_back(static_cast<char>(kG6High));
    out.push_back(static_cast<char>(kG6High));
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kG6Low));
  }
  int chunk = 0;
  int filled = 0;
  for (Vertex v = 1; v < g.order(); ++v) {
    for (Vertex u = 0; u < v; ++u) {
      chunk = (chunk << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kG6Low));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kG6Low));
  return out;
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
  return format == GraphFormat::Graph6 ? to_graph6(g) : to_edge_list(g);
}

}  // namespace lrw1
