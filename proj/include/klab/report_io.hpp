// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "klab/linalg.hpp"
#include "klab/transforms.hpp"
#include "klab/verify.hpp"

namespace klab {

using Json = nlohmann::ordered_json;

/// {graph:{n,m,seed}, kind, deltas:{class_pairs:{...}, kirchhoff, overall}, tolerance, pass}
Json to_json(const DiscrepancyReport& report);

/// {pass, count, reports:[...]}
Json to_json(const std::vector<DiscrepancyReport>& reports);

/// {graph:{n,m,seed}, clauses:[{id, max_delta, pairs, printed, oracle, worst_pair, domains, notes}]}
Json to_json(const AuditReport& report);

/// {n, kind, matrix:[[...]]}
Json matrix_to_json(const Matrix<double>& m, TransformKind kind);

/// Shortest decimal string that reads back to the same double.
std::string format_shortest(double value);

/// One row per line, comma separated.
void write_csv(std::ostream& out, const Matrix<double>& m);

/// One row per line, space separated.
void write_plain(std::ostream& out, const Matrix<double>& m);

}  // namespace klab
