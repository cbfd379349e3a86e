// SPDX-License-Identifier: Apache-2.0

#include "klab/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <set>
#include <sstream>

namespace klab {

Graph::Graph(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges) : n_(n) {
  std::set<std::pair<VertexId, VertexId>> seen;
  edges_.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    if (u == v) {
      throw GraphFormatError(i + 1, "self-loop at vertex " + std::to_string(u));
    }
    if (u > v) std::swap(u, v);
    if (v >= n) {
      throw GraphFormatError(i + 1, "vertex id " + std::to_string(v) + " >= n = " + std::to_string(n));
    }
    if (!seen.emplace(u, v).second) {
      throw GraphFormatError(i + 1, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    edges_.push_back(Edge{u, v});
  }
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> deg(n_, 0);
  for (const Edge& e : edges_) {
    ++deg[e.tail];
    ++deg[e.head];
  }
  return deg;
}

namespace {

// Dense matrices are built from parsed graphs; ids beyond this are rejected.
constexpr std::uint64_t kMaxVertexId = std::uint64_t{1} << 24;

struct RawLine {
  std::size_t number;
  std::uint64_t first;
  std::uint64_t second;
};

std::uint64_t parse_id(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw GraphFormatError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
  }
  if (value > kMaxVertexId) {
    throw GraphFormatError(line, "vertex id " + std::string(token) + " is too large");
  }
  return value;
}

std::vector<RawLine> tokenize(std::istream& in) {
  std::vector<RawLine> lines;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    std::istringstream fields(text);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.size() != 2) {
      throw GraphFormatError(number, "expected two integers, got " + std::to_string(tokens.size()) + " fields");
    }
    lines.push_back(RawLine{number, parse_id(tokens[0], number), parse_id(tokens[1], number)});
  }
  return lines;
}

// Builds the graph, reporting errors against the source line numbers.
Graph build(std::size_t n, const std::vector<RawLine>& lines, std::size_t first) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (std::size_t i = first; i < lines.size(); ++i) {
    edges.emplace_back(lines[i].first, lines[i].second);
  }
  try {
    return Graph(n, edges);
  } catch (const GraphFormatError& e) {
    // Graph numbers edges from 1; map back to the text line.
    const RawLine& bad = lines[first + e.line() - 1];
    std::string msg = e.what();
    msg = msg.substr(msg.find(": ") + 2);
    throw GraphFormatError(bad.number, msg);
  }
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  const std::vector<RawLine> lines = tokenize(in);
  if (lines.empty()) return Graph{};

  const RawLine& header = lines.front();
  const std::size_t rest = lines.size() - 1;
  // A zero vertex count is never a header, so "0 0" stays a self-loop.
  if (header.first > 0 && header.second == rest) {
    const bool ids_fit = std::all_of(lines.begin() + 1, lines.end(), [&](const RawLine& l) {
      return l.first < header.first && l.second < header.first;
    });
    if (ids_fit) return build(header.first, lines, 1);
    // Only a header can be a self-loop; then the out-of-range id is an error.
    if (header.first == header.second) return build(header.first, lines, 1);
  }

  std::uint64_t max_id = 0;
  for (const RawLine& l : lines) max_id = std::max({max_id, l.first, l.second});
  return build(max_id + 1, lines, 0);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

std::string render_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.tail << ' ' << e.head << '\n';
  return out.str();
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n <= 1) return true;
  std::vector<std::vector<VertexId>> adj(n);
  for (const Edge& e : g.edges()) {
    adj[e.tail].push_back(e.head);
    adj[e.head].push_back(e.tail);
  }
  std::vector<bool> visited(n, false);
  std::vector<VertexId> stack{0};
  visited[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const VertexId u = stack.back();
    stack.pop_back();
    for (VertexId v : adj[u]) {
      if (!visited[v]) {
        visited[v] = true;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == n;
}

}  // namespace klab
