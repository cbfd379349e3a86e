// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "klab/graph.hpp"

namespace klab {

/// Quadrilateral: every edge uv also gets a parallel path u-p1-p2-v.
/// Pentagonal: every edge uv also gets a parallel path u-p1-p2-p3-v.
enum class TransformKind { Quadrilateral, Pentagonal };

/// Number of subdivision vertices per factor edge (2 or 3).
constexpr std::size_t path_length(TransformKind kind) noexcept {
  return kind == TransformKind::Quadrilateral ? 2 : 3;
}

/// "quad" / "pent".
std::string_view to_string(TransformKind kind) noexcept;
std::optional<TransformKind> parse_transform_kind(std::string_view name) noexcept;

enum class VertexRole { Original, Path1, Path2, Path3 };

std::string_view to_string(VertexRole role) noexcept;

/// A vertex of a transformed graph named by its role and index within the
/// role: the factor vertex id for Original, the factor edge index otherwise.
///
/// Flat ids: Original k -> k, Path1 i -> n+i, Path2 i -> n+m+i,
/// Path3 i -> n+2m+i.
struct VertexClass {
  VertexRole role = VertexRole::Original;
  std::size_t index = 0;

  friend bool operator==(const VertexClass&, const VertexClass&) = default;
};

class InvalidVertexClassError : public Error {
 public:
  using Error::Error;
};

std::size_t transformed_vertex_count(std::size_t n, std::size_t m, TransformKind kind) noexcept;

/// Throws InvalidVertexClassError when the class does not exist for (n, m, kind).
std::size_t flat_id(VertexClass v, std::size_t n, std::size_t m, TransformKind kind);
VertexClass classify(std::size_t id, std::size_t n, std::size_t m, TransformKind kind);

Graph quadrilateral(const Graph& g);
Graph pentagonal(const Graph& g);

/// Path1 of edge i attaches to the tail and the last path vertex to the head.
Graph transform(const Graph& g, TransformKind kind, Orientation orientation = Orientation::SmallerIdTail);

}  // namespace klab
