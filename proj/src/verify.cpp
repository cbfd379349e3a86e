// SPDX-License-Identifier: Apache-2.0

#include "klab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "klab/oracle.hpp"
#include "klab/structured.hpp"

namespace klab {

Graph random_connected_graph(std::size_t n, double p, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random_connected_graph: n must be at least 2");
  if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("random_connected_graph: p must be in (0, 1]");

  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = u + 1; v < n; ++v) {
        if (rng.uniform() < p) edges.emplace_back(u, v);
      }
    }
    Graph g(n, edges);
    if (is_connected(g)) return g;
  }
  throw GeneratorError("no connected G(" + std::to_string(n) + ", " + std::to_string(p) + ") sample in " +
                       std::to_string(kMaxRejections) + " attempts");
}

std::string ClassPairDelta::name() const {
  return std::string(to_string(first)) + "-" + std::string(to_string(second));
}

DiscrepancyReport compare(const Graph& g, TransformKind kind, double tol, std::uint64_t seed) {
  const auto structured = build_structured_inverse<double>(g, kind);
  const Graph t = transform(g, kind);
  const Matrix<double> expected = oracle_resistance_matrix<double>(t);
  const Matrix<double> actual = resistance_matrix(structured);

  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_edges();
  const std::size_t roles = 1 + path_length(kind);

  // Upper-triangular table over role pairs.
  std::vector<std::vector<double>> table(roles, std::vector<double>(roles, 0.0));
  const std::size_t total = t.num_vertices();
  for (std::size_t i = 0; i < total; ++i) {
    const auto ri = static_cast<std::size_t>(classify(i, n, m, kind).role);
    for (std::size_t j = 0; j < total; ++j) {
      const auto rj = static_cast<std::size_t>(classify(j, n, m, kind).role);
      const double delta = std::abs(actual(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) -
                                    expected(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
      double& slot = table[std::min(ri, rj)][std::max(ri, rj)];
      slot = std::max(slot, delta);
    }
  }

  DiscrepancyReport report;
  report.graph = GraphDescriptor{n, m, seed};
  report.kind = kind;
  report.tolerance = tol;
  for (std::size_t a = 0; a < roles; ++a) {
    for (std::size_t b = a; b < roles; ++b) {
      report.class_pairs.push_back(
          ClassPairDelta{static_cast<VertexRole>(a), static_cast<VertexRole>(b), table[a][b]});
      report.overall = std::max(report.overall, table[a][b]);
    }
  }
  report.kirchhoff_delta = std::abs(kirchhoff(structured) - oracle_kirchhoff<double>(t));
  report.pass = report.overall <= tol && report.kirchhoff_delta <= tol;
  return report;
}

std::vector<CorpusGraph> sample_corpus(std::size_t count, std::size_t n_max, double p,
                                       std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("corpus count must be at least 1");
  if (n_max < 2) throw std::invalid_argument("corpus n_max must be at least 2");
  SplitMix64 rng(seed);
  std::vector<CorpusGraph> corpus;
  corpus.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng.next() % (n_max - 1));
    const std::uint64_t item_seed = rng.next();
    corpus.push_back(CorpusGraph{random_connected_graph(n, p, item_seed), item_seed});
  }
  return corpus;
}

std::vector<DiscrepancyReport> run_corpus(std::size_t count, std::size_t n_max, double p,
                                          std::uint64_t seed, double tol) {
  std::vector<DiscrepancyReport> reports;
  for (const CorpusGraph& item : sample_corpus(count, n_max, p, seed)) {
    reports.push_back(compare(item.graph, TransformKind::Quadrilateral, tol, item.seed));
    reports.push_back(compare(item.graph, TransformKind::Pentagonal, tol, item.seed));
  }
  return reports;
}

bool all_pass(const std::vector<DiscrepancyReport>& reports) noexcept {
  return std::all_of(reports.begin(), reports.end(), [](const DiscrepancyReport& r) { return r.pass; });
}

const ClauseAudit* AuditReport::find(const std::string& id) const {
  for (const ClauseAudit& c : clauses) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

}  // namespace klab
