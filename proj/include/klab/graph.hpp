// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace klab {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed edge-list text or an edge set that is not a simple graph.
class GraphFormatError : public Error {
 public:
  GraphFormatError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A connected graph was required.
class DisconnectedGraphError : public Error {
 public:
  using Error::Error;
};

using VertexId = std::size_t;

struct Edge {
  VertexId tail;  // smaller id
  VertexId head;  // larger id

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are kept in insertion order with endpoints normalized so that
/// tail < head. Edge order is significant: it fixes the labels of the
/// subdivision vertices created by the quadrilateral and pentagonal
/// transforms.
class Graph {
 public:
  Graph() = default;

  /// Throws GraphFormatError on self-loops, duplicates or ids >= n.
  Graph(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges);

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }

  std::vector<std::size_t> degrees() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

/// Tail/head split of the unsigned vertex-edge incidence matrix.
///
/// Column i of `tail` marks the smaller endpoint of edge i and column i of
/// `head` the larger one, so tail + head is the unsigned incidence matrix,
/// tail*tail^T + head*head^T is the degree matrix and
/// tail*head^T + head*tail^T is the adjacency matrix.
template <typename Scalar = double>
struct IncidenceSplit {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> tail;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> head;
};

/// Parses the edge-list text format.
///
/// One "u v" pair per line, '#' starts a comment line, blank lines are
/// skipped. An optional leading "n m" line is taken as a header when it is
/// followed by exactly m edge lines whose ids all fit in [0, n). Without a
/// header n is one more than the largest id seen.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);

/// Canonical rendering: "n m" header then one "u v" line per edge.
std::string render_edge_list(const Graph& g);

bool is_connected(const Graph& g);

/// Which endpoint of an edge counts as its tail. Any fixed choice satisfies
/// the split identities; the library default is the smaller id.
enum class Orientation { SmallerIdTail, LargerIdTail };

template <typename Scalar = double>
IncidenceSplit<Scalar> incidence_split(const Graph& g, Orientation orientation = Orientation::SmallerIdTail) {
  const bool swap_orientation = orientation == Orientation::LargerIdTail;
  const auto n = static_cast<Eigen::Index>(g.num_vertices());
  const auto m = static_cast<Eigen::Index>(g.num_edges());
  IncidenceSplit<Scalar> split{
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, m),
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, m)};
  for (Eigen::Index i = 0; i < m; ++i) {
    const Edge& e = g.edges()[static_cast<std::size_t>(i)];
    const auto t = static_cast<Eigen::Index>(swap_orientation ? e.head : e.tail);
    const auto h = static_cast<Eigen::Index>(swap_orientation ? e.tail : e.head);
    split.tail(t, i) = Scalar(1);
    split.head(h, i) = Scalar(1);
  }
  return split;
}

template <typename Scalar = double>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> adjacency(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.num_vertices());
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, n);
  for (const Edge& e : g.edges()) {
    a(static_cast<Eigen::Index>(e.tail), static_cast<Eigen::Index>(e.head)) = Scalar(1);
    a(static_cast<Eigen::Index>(e.head), static_cast<Eigen::Index>(e.tail)) = Scalar(1);
  }
  return a;
}

/// L = D - A.
template <typename Scalar = double>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> laplacian(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.num_vertices());
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> l =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, n);
  for (const Edge& e : g.edges()) {
    const auto u = static_cast<Eigen::Index>(e.tail);
    const auto v = static_cast<Eigen::Index>(e.head);
    l(u, u) += Scalar(1);
    l(v, v) += Scalar(1);
    l(u, v) -= Scalar(1);
    l(v, u) -= Scalar(1);
  }
  return l;
}

}  // namespace klab
