// SPDX-License-Identifier: Apache-2.0

#include "klab/report_io.hpp"

#include <array>
#include <charconv>

namespace klab {

namespace {

Json graph_json(const GraphDescriptor& g) { return Json{{"n", g.n}, {"m", g.m}, {"seed", g.seed}}; }

void write_rows(std::ostream& out, const Matrix<double>& m, char sep) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out << sep;
      out << format_shortest(m(i, j));
    }
    out << '\n';
  }
}

}  // namespace

Json to_json(const DiscrepancyReport& report) {
  Json pairs = Json::object();
  for (const ClassPairDelta& d : report.class_pairs) pairs[d.name()] = d.max_delta;
  Json j;
  j["graph"] = graph_json(report.graph);
  j["kind"] = std::string(to_string(report.kind));
  j["deltas"] = Json{{"class_pairs", pairs}, {"kirchhoff", report.kirchhoff_delta}, {"overall", report.overall}};
  j["tolerance"] = report.tolerance;
  j["pass"] = report.pass;
  return j;
}

Json to_json(const std::vector<DiscrepancyReport>& reports) {
  Json list = Json::array();
  for (const DiscrepancyReport& r : reports) list.push_back(to_json(r));
  Json j;
  j["pass"] = all_pass(reports);
  j["count"] = reports.size();
  j["reports"] = std::move(list);
  return j;
}

Json to_json(const AuditReport& report) {
  Json clauses = Json::array();
  for (const ClauseAudit& c : report.clauses) {
    Json domains = Json::array();
    for (const ClauseDomain& d : c.domains) {
      domains.push_back(Json{{"name", d.name}, {"pairs", d.pairs}, {"max_delta", d.max_delta}});
    }
    Json item;
    item["id"] = c.id;
    item["max_delta"] = c.max_delta;
    item["pairs"] = c.pairs;
    item["printed"] = c.printed;
    item["oracle"] = c.oracle;
    item["worst_pair"] = c.worst_pair ? Json::array({c.worst_pair->first, c.worst_pair->second}) : Json();
    item["domains"] = std::move(domains);
    item["notes"] = c.notes;
    clauses.push_back(std::move(item));
  }
  Json j;
  j["graph"] = graph_json(report.graph);
  j["clauses"] = std::move(clauses);
  return j;
}

Json matrix_to_json(const Matrix<double>& m, TransformKind kind) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  Json j;
  j["n"] = m.rows();
  j["kind"] = std::string(to_string(kind));
  j["matrix"] = std::move(rows);
  return j;
}

std::string format_shortest(double value) {
  std::array<char, 32> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return ec == std::errc() ? std::string(buf.data(), ptr) : std::string("nan");
}

void write_csv(std::ostream& out, const Matrix<double>& m) { write_rows(out, m, ','); }

void write_plain(std::ostream& out, const Matrix<double>& m) { write_rows(out, m, ' '); }

}  // namespace klab
