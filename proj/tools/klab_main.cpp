// SPDX-License-Identifier: Apache-2.0

// klab: resistance distances and Kirchhoff indices of quadrilateral and
// pentagonal graphs.
//
// Exit codes: 0 success, 1 verification tolerance failure (or internal
// error), 2 input or usage error.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "klab/graph.hpp"
#include "klab/oracle.hpp"
#include "klab/report_io.hpp"
#include "klab/structured.hpp"
#include "klab/transforms.hpp"
#include "klab/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;

// Distinguishes usage problems from library errors in the top-level handler.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

klab::Graph read_graph(const std::string& path) {
  if (path == "-") return klab::parse_edge_list(std::cin);
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return klab::parse_edge_list(in);
}

klab::TransformKind require_kind(const std::string& name) {
  auto kind = klab::parse_transform_kind(name);
  if (!kind) throw UsageError("--kind must be quad or pent, got '" + name + "'");
  return *kind;
}

std::string twelve_digits(double value) {
  std::ostringstream out;
  out << std::showpoint << std::setprecision(12) << value;
  return out.str();
}

struct Options {
  std::string input;
  std::string output;
  std::string kind;
  std::string format = "json";
  double tol = 1e-8;
  std::uint64_t seed = 7;
  std::size_t count = 100;
  std::size_t n_max = 10;
  double p = 0.5;
  bool check = false;
};

int cmd_transform(const Options& o) {
  const klab::Graph t = klab::transform(read_graph(o.input), require_kind(o.kind));
  const std::string text = klab::render_edge_list(t);
  if (o.output.empty() || o.output == "-") {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(o.output);
  if (!out) throw UsageError("cannot write " + o.output);
  out << text;
  return out ? kExitOk : kExitInputError;
}

int cmd_resist(const Options& o) {
  const klab::Graph g = read_graph(o.input);
  const klab::TransformKind kind = require_kind(o.kind);
  const auto x = klab::build_structured_inverse<double>(g, kind);
  const klab::Matrix<double> r = klab::resistance_matrix(x);
  if (o.format == "csv") {
    klab::write_csv(std::cout, r);
  } else if (o.format == "plain") {
    klab::write_plain(std::cout, r);
  } else {
    std::cout << klab::matrix_to_json(r, kind).dump() << '\n';
  }
  if (o.check) {
    const klab::DiscrepancyReport report = klab::compare(g, kind, o.tol);
    if (!report.pass) {
      std::cerr << "self-check failed: " << klab::to_json(report).dump() << '\n';
      return kExitVerifyFailed;
    }
  }
  return kExitOk;
}

int cmd_kirchhoff(const Options& o) {
  const klab::Graph g = read_graph(o.input);
  double kf = 0.0;
  if (o.kind == "none") {
    kf = klab::oracle_kirchhoff<double>(g);
  } else {
    kf = klab::kirchhoff(klab::build_structured_inverse<double>(g, require_kind(o.kind)));
  }
  std::cout << twelve_digits(kf) << '\n';
  return kExitOk;
}

int cmd_verify(const Options& o) {
  const auto reports = klab::run_corpus(o.count, o.n_max, o.p, o.seed, o.tol);
  std::cout << klab::to_json(reports).dump() << '\n';
  return klab::all_pass(reports) ? kExitOk : kExitVerifyFailed;
}

int cmd_audit(const Options& o) {
  const klab::Graph g = read_graph(o.input);
  const klab::AuditReport report =
      o.kind == "both" ? klab::audit_theorems(g) : klab::audit_theorems(g, require_kind(o.kind));
  std::cout << klab::to_json(report).dump() << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resistance distance and Kirchhoff index of quadrilateral and pentagonal graphs"};
  app.require_subcommand(1);
  Options o;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "Edge-list file ('-' for standard input)")->required();
  };
  // Each subcommand keeps its own kind so the defaults do not clash.
  std::map<CLI::App*, std::string> kinds;
  auto add_kind = [&](CLI::App* sub, std::vector<std::string> allowed, const std::string& fallback) {
    kinds[sub] = fallback;
    sub->add_option("--kind", kinds[sub], "Transform kind")
        ->envname("KLAB_KIND")
        ->check(CLI::IsMember(std::move(allowed)))
        ->capture_default_str();
  };

  auto* transform = app.add_subcommand("transform", "Write Q(G) or W(G) as an edge list");
  add_input(transform);
  add_kind(transform, {"quad", "pent"}, "quad");
  transform->add_option("-o,--output", o.output, "Output file (default standard output)");

  auto* resist = app.add_subcommand("resist", "Resistance matrix of the transformed graph");
  add_input(resist);
  add_kind(resist, {"quad", "pent"}, "quad");
  resist->add_option("--format", o.format, "Output format")
      ->envname("KLAB_FORMAT")
      ->check(CLI::IsMember({"json", "csv", "plain"}))
      ->capture_default_str();
  resist->add_flag("--check", o.check, "Compare against the brute-force oracle; exit 1 beyond --tol");
  resist->add_option("--tol", o.tol, "Self-check tolerance")->envname("KLAB_TOL")->capture_default_str();

  auto* kf = app.add_subcommand("kirchhoff", "Kirchhoff index of the transformed graph (or of G with --kind none)");
  add_input(kf);
  add_kind(kf, {"quad", "pent", "none"}, "quad");

  auto* verify = app.add_subcommand("verify", "Structured-vs-oracle comparison on a random corpus");
  verify->add_option("--count", o.count, "Number of graphs")
      ->envname("KLAB_COUNT")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--n-max", o.n_max, "Largest vertex count")
      ->envname("KLAB_N_MAX")
      ->check(CLI::Range(std::size_t{2}, std::size_t{64}))
      ->capture_default_str();
  verify->add_option("--p", o.p, "Edge probability")
      ->envname("KLAB_P")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  verify->add_option("--seed", o.seed, "Corpus seed")->envname("KLAB_SEED")->capture_default_str();
  verify->add_option("--tol", o.tol, "Absolute tolerance")->envname("KLAB_TOL")->capture_default_str();

  auto* audit = app.add_subcommand("audit", "Evaluate the closed-form resistance and Kirchhoff clauses against the oracle");
  add_input(audit);
  add_kind(audit, {"quad", "pent", "both"}, "both");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  CLI::App* chosen = app.get_subcommands().front();
  if (auto it = kinds.find(chosen); it != kinds.end()) o.kind = it->second;

  try {
    if (chosen == transform) return cmd_transform(o);
    if (chosen == resist) return cmd_resist(o);
    if (chosen == kf) return cmd_kirchhoff(o);
    if (chosen == verify) return cmd_verify(o);
    return cmd_audit(o);
  } catch (const klab::GraphFormatError& e) {
    std::cerr << "klab: invalid graph: " << e.what() << '\n';
  } catch (const klab::Error& e) {
    std::cerr << "klab: " << e.what() << '\n';
  } catch (const UsageError& e) {
    std::cerr << "klab: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    std::cerr << "klab: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "klab: internal error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return kExitInputError;
}
