// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "klab/graph.hpp"
#include "klab/transforms.hpp"

namespace klab {

/// SplitMix64. Seeded with 0 the first three outputs are
/// 0xe220a8397b1dcdaf, 0x6e789e6aa1b965f4, 0x06c45d188009454f.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) from the top 53 bits.
  double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

class GeneratorError : public Error {
 public:
  using Error::Error;
};

constexpr int kMaxRejections = 10000;

/// Erdos-Renyi G(n, p) conditioned on connectivity by rejection.
///
/// One SplitMix64 stream seeded with `seed` drives every attempt; pairs
/// (u, v), u < v, are visited in lexicographic order and kept when
/// uniform() < p. Throws GeneratorError after kMaxRejections failed draws.
Graph random_connected_graph(std::size_t n, double p, std::uint64_t seed);

struct GraphDescriptor {
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t seed = 0;
};

struct ClassPairDelta {
  VertexRole first;
  VertexRole second;
  double max_delta = 0.0;

  std::string name() const;  // e.g. "original-path1"
};

/// Structured-vs-oracle comparison on one transformed graph.
struct DiscrepancyReport {
  GraphDescriptor graph;
  TransformKind kind = TransformKind::Quadrilateral;
  std::vector<ClassPairDelta> class_pairs;  // unordered role pairs, fixed order
  double kirchhoff_delta = 0.0;
  double overall = 0.0;  // max over class_pairs
  double tolerance = 0.0;
  bool pass = false;
};

/// Builds the transform explicitly, runs the oracle on it and compares every
/// resistance entry and Kf against the structured inverse built from g.
/// pass iff both the overall entry delta and the Kf delta are <= tol.
DiscrepancyReport compare(const Graph& g, TransformKind kind, double tol, std::uint64_t seed = 0);

struct CorpusGraph {
  Graph graph;
  std::uint64_t seed = 0;
};

/// Deterministic corpus: a SplitMix64 stream seeded with `seed` yields, per
/// item, n = 2 + next() % (n_max - 1) and then the item seed next().
std::vector<CorpusGraph> sample_corpus(std::size_t count, std::size_t n_max, double p,
                                       std::uint64_t seed);

/// Two reports (quad, pent) per corpus graph, in corpus order.
std::vector<DiscrepancyReport> run_corpus(std::size_t count, std::size_t n_max, double p,
                                          std::uint64_t seed, double tol);

bool all_pass(const std::vector<DiscrepancyReport>& reports) noexcept;

// ---------------------------------------------------------------------------
// Audit of the closed-form resistance and Kirchhoff clauses, transcribed literally.

struct ClauseDomain {
  std::string name;
  std::size_t pairs = 0;
  double max_delta = 0.0;
};

struct ClauseAudit {
  std::string id;  // "3.1.i" .. "3.1.v", "4.1.i" .. "4.1.viii"
  std::vector<ClauseDomain> domains;
  std::size_t pairs = 0;
  double max_delta = 0.0;
  // Formula and oracle value where the delta peaks, plus the flat ids of
  // that pair in the transformed graph (absent for Kirchhoff clauses).
  double printed = 0.0;
  double oracle = 0.0;
  std::optional<std::pair<std::size_t, std::size_t>> worst_pair;
  std::vector<std::string> notes;
};

struct AuditReport {
  GraphDescriptor graph;
  std::vector<ClauseAudit> clauses;

  const ClauseAudit* find(const std::string& id) const;
};

/// Clauses for one transform: 5 for quadrilateral, 8 for pentagonal.
AuditReport audit_theorems(const Graph& g, TransformKind kind, std::uint64_t seed = 0);

/// All 13 clauses, quadrilateral first.
AuditReport audit_theorems(const Graph& g, std::uint64_t seed = 0);

}  // namespace klab
