// SPDX-License-Identifier: Apache-2.0

#include "klab/transforms.hpp"

#include <utility>
#include <vector>

namespace klab {

std::string_view to_string(TransformKind kind) noexcept {
  return kind == TransformKind::Quadrilateral ? "quad" : "pent";
}

std::optional<TransformKind> parse_transform_kind(std::string_view name) noexcept {
  if (name == "quad" || name == "quadrilateral") return TransformKind::Quadrilateral;
  if (name == "pent" || name == "pentagonal") return TransformKind::Pentagonal;
  return std::nullopt;
}

std::string_view to_string(VertexRole role) noexcept {
  switch (role) {
    case VertexRole::Original: return "original";
    case VertexRole::Path1: return "path1";
    case VertexRole::Path2: return "path2";
    case VertexRole::Path3: return "path3";
  }
  return "unknown";
}

std::size_t transformed_vertex_count(std::size_t n, std::size_t m, TransformKind kind) noexcept {
  return n + path_length(kind) * m;
}

std::size_t flat_id(VertexClass v, std::size_t n, std::size_t m, TransformKind kind) {
  if (v.role == VertexRole::Original) {
    if (v.index >= n) {
      throw InvalidVertexClassError("original vertex " + std::to_string(v.index) + " out of range");
    }
    return v.index;
  }
  const auto slot = static_cast<std::size_t>(v.role) - 1;
  if (slot >= path_length(kind)) {
    throw InvalidVertexClassError(std::string(to_string(v.role)) + " does not exist in a " +
                                  std::string(to_string(kind)) + " transform");
  }
  if (v.index >= m) {
    throw InvalidVertexClassError(std::string(to_string(v.role)) + " index " + std::to_string(v.index) +
                                  " out of range");
  }
  return n + slot * m + v.index;
}

VertexClass classify(std::size_t id, std::size_t n, std::size_t m, TransformKind kind) {
  if (id >= transformed_vertex_count(n, m, kind)) {
    throw InvalidVertexClassError("vertex id " + std::to_string(id) + " out of range");
  }
  if (id < n) return VertexClass{VertexRole::Original, id};
  const std::size_t offset = id - n;
  return VertexClass{static_cast<VertexRole>(1 + offset / m), offset % m};
}

Graph transform(const Graph& g, TransformKind kind, Orientation orientation) {
  const bool swapped = orientation == Orientation::LargerIdTail;
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_edges();
  const std::size_t k = path_length(kind);
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve((k + 2) * m);
  for (std::size_t i = 0; i < m; ++i) {
    const Edge& e = g.edges()[i];
    const VertexId tail = swapped ? e.head : e.tail;
    const VertexId head = swapped ? e.tail : e.head;
    edges.emplace_back(e.tail, e.head);
    VertexId prev = tail;
    for (std::size_t s = 0; s < k; ++s) {
      const VertexId p = n + s * m + i;
      edges.emplace_back(prev, p);
      prev = p;
    }
    edges.emplace_back(prev, head);
  }
  return Graph(n + k * m, edges);
}

Graph quadrilateral(const Graph& g) { return transform(g, TransformKind::Quadrilateral); }

Graph pentagonal(const Graph& g) { return transform(g, TransformKind::Pentagonal); }

}  // namespace klab
