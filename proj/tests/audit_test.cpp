// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "klab/verify.hpp"
#include "support/test_graphs.hpp"

namespace klab {
namespace {

// Reference deltas from an independent pseudo-inverse transcription.
constexpr double kTol = 1e-9;

std::vector<std::string> ids(const AuditReport& r) {
  std::vector<std::string> out;
  for (const auto& c : r.clauses) out.push_back(c.id);
  return out;
}

double delta(const AuditReport& r, const std::string& id) {
  const ClauseAudit* c = r.find(id);
  EXPECT_NE(c, nullptr) << id;
  return c ? c->max_delta : NAN;
}

double domain_delta(const AuditReport& r, const std::string& id, std::size_t k) {
  const ClauseAudit* c = r.find(id);
  EXPECT_NE(c, nullptr) << id;
  EXPECT_LT(k, c->domains.size()) << id;
  return c->domains.at(k).max_delta;
}

TEST(Audit, ClauseIds) {
  const Graph g = testing::k3();
  EXPECT_EQ(ids(audit_theorems(g, TransformKind::Quadrilateral)),
            (std::vector<std::string>{"3.1.i", "3.1.ii", "3.1.iii", "3.1.iv", "3.1.v"}));
  EXPECT_EQ(ids(audit_theorems(g, TransformKind::Pentagonal)),
            (std::vector<std::string>{"4.1.i", "4.1.ii", "4.1.iii", "4.1.iv", "4.1.v", "4.1.vi", "4.1.vii",
                                      "4.1.viii"}));
  const AuditReport all = audit_theorems(g, 5);
  EXPECT_EQ(all.clauses.size(), 13u);
  EXPECT_EQ(all.graph.n, 3u);
  EXPECT_EQ(all.graph.m, 3u);
  EXPECT_EQ(all.graph.seed, 5u);
  EXPECT_EQ(all.find("nope"), nullptr);
}

TEST(Audit, K2Quadrilateral) {
  const AuditReport r = audit_theorems(testing::k2(), TransformKind::Quadrilateral);
  EXPECT_NEAR(delta(r, "3.1.i"), 0.0, 1e-10);
  EXPECT_NEAR(domain_delta(r, "3.1.ii", 0), 2.0 / 3, kTol);
  EXPECT_NEAR(domain_delta(r, "3.1.ii", 1), 11.0 / 12, kTol);
  EXPECT_NEAR(delta(r, "3.1.ii"), 11.0 / 12, kTol);
  EXPECT_NEAR(delta(r, "3.1.iii"), 0.3125, kTol);
  EXPECT_EQ(r.find("3.1.iv")->pairs, 0u);
  EXPECT_EQ(delta(r, "3.1.iv"), 0.0);
  EXPECT_NEAR(delta(r, "3.1.v"), 5.5, kTol);
  EXPECT_NEAR(r.find("3.1.v")->printed, -0.5, kTol);
  EXPECT_NEAR(r.find("3.1.v")->oracle, 5.0, kTol);
  EXPECT_FALSE(r.find("3.1.v")->worst_pair.has_value());
  EXPECT_TRUE(r.find("3.1.iii")->worst_pair.has_value());
}

TEST(Audit, K2Pentagonal) {
  const AuditReport r = audit_theorems(testing::k2(), TransformKind::Pentagonal);
  EXPECT_NEAR(delta(r, "4.1.i"), 0.0, 1e-10);
  EXPECT_NEAR(delta(r, "4.1.ii"), 0.0, 1e-10);
  EXPECT_NEAR(delta(r, "4.1.iii"), 0.05, kTol);
  EXPECT_NEAR(delta(r, "4.1.iv"), 0.75, kTol);
  EXPECT_NEAR(delta(r, "4.1.v"), 0.0, 1e-10);
  EXPECT_NEAR(delta(r, "4.1.vi"), 0.2, kTol);
  EXPECT_NEAR(delta(r, "4.1.vii"), 0.5, kTol);
  EXPECT_NEAR(delta(r, "4.1.viii"), 0.2375, kTol);
  EXPECT_NEAR(r.find("4.1.viii")->printed, 9.7625, kTol);
  EXPECT_NEAR(r.find("4.1.viii")->oracle, 10.0, kTol);
}

TEST(Audit, P3) {
  const AuditReport r = audit_theorems(testing::p3());
  EXPECT_NEAR(delta(r, "3.1.i"), 0.0, 1e-10);
  EXPECT_NEAR(domain_delta(r, "3.1.ii", 0), 2.0 / 3, kTol);
  EXPECT_NEAR(domain_delta(r, "3.1.ii", 1), 11.0 / 12, kTol);
  EXPECT_NEAR(delta(r, "3.1.iii"), 5.0 / 12, kTol);
  EXPECT_NEAR(domain_delta(r, "3.1.iv", 0), 0.0, 1e-10);
  EXPECT_NEAR(domain_delta(r, "3.1.iv", 1), 0.0, 1e-10);
  EXPECT_NEAR(delta(r, "3.1.v"), 19.25, kTol);
  EXPECT_NEAR(r.find("3.1.v")->printed, 5.75, kTol);

  EXPECT_NEAR(delta(r, "4.1.i"), 0.0, 1e-10);
  EXPECT_NEAR(delta(r, "4.1.ii"), 0.0, 1e-10);
  EXPECT_NEAR(delta(r, "4.1.iii"), 0.1166666667, 1e-8);
  EXPECT_NEAR(delta(r, "4.1.iv"), 0.75, kTol);
  EXPECT_NEAR(delta(r, "4.1.v"), 0.6555555556, 1e-8);
  EXPECT_NEAR(delta(r, "4.1.vi"), 0.3111111111, 1e-8);
  EXPECT_NEAR(delta(r, "4.1.vii"), 0.6986111111, 1e-8);
  EXPECT_NEAR(delta(r, "4.1.viii"), 1.2544444444, 1e-8);
}

TEST(Audit, K3) {
  const AuditReport r = audit_theorems(testing::k3());
  EXPECT_NEAR(delta(r, "3.1.i"), 0.0, 1e-10);
  EXPECT_NEAR(domain_delta(r, "3.1.ii", 0), 2.0 / 3, kTol);
  EXPECT_NEAR(domain_delta(r, "3.1.ii", 1), 5.0 / 6, kTol);
  EXPECT_NEAR(delta(r, "3.1.iii"), 0.3611111111, 1e-8);
  EXPECT_NEAR(domain_delta(r, "3.1.iv", 0), 0.0, 1e-10);
  EXPECT_NEAR(domain_delta(r, "3.1.iv", 1), 1.0 / 6, kTol);
  EXPECT_NEAR(delta(r, "3.1.v"), 36.75, kTol);
  EXPECT_NEAR(r.find("3.1.v")->printed, 0.75, kTol);

  EXPECT_NEAR(delta(r, "4.1.i"), 0.0, 1e-10);
  EXPECT_NEAR(delta(r, "4.1.ii"), 0.0, 1e-10);
  EXPECT_NEAR(delta(r, "4.1.iii"), 0.0333333333, 1e-8);
  EXPECT_NEAR(delta(r, "4.1.iv"), 0.75, kTol);
  EXPECT_NEAR(delta(r, "4.1.v"), 0.5555555556, 1e-8);
  EXPECT_NEAR(delta(r, "4.1.vi"), 0.2611111111, 1e-8);
  EXPECT_NEAR(delta(r, "4.1.vii"), 0.5611111111, 1e-8);
  EXPECT_NEAR(delta(r, "4.1.viii"), 1.4733333333, 1e-8);
  EXPECT_NEAR(r.find("4.1.viii")->printed, 87.1266666667, 1e-8);
}

TEST(Audit, C4KirchhoffClauses) {
  const AuditReport r = audit_theorems(testing::cycle(4));
  EXPECT_NEAR(r.find("3.1.v")->printed, 12.25, kTol);
  EXPECT_NEAR(r.find("3.1.v")->oracle, 77.75, kTol);
  EXPECT_NEAR(r.find("4.1.viii")->printed, 176.3625, kTol);
  EXPECT_NEAR(r.find("4.1.viii")->oracle, 180.0, kTol);
}

TEST(Audit, Invariants) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 15; ++trial) {
    const Graph g = testing::random_connected(rng, 2 + trial % 8, 0.5);
    const AuditReport a = audit_theorems(g);
    const AuditReport b = audit_theorems(g);
    ASSERT_EQ(a.clauses.size(), 13u);
    for (std::size_t k = 0; k < a.clauses.size(); ++k) {
      const ClauseAudit& c = a.clauses[k];
      EXPECT_TRUE(std::isfinite(c.max_delta)) << c.id;
      EXPECT_GE(c.max_delta, 0.0) << c.id;
      EXPECT_EQ(c.max_delta, b.clauses[k].max_delta) << c.id;
      EXPECT_EQ(c.printed, b.clauses[k].printed) << c.id;
      double worst = 0.0;
      std::size_t pairs = 0;
      for (const auto& d : c.domains) {
        worst = std::max(worst, d.max_delta);
        pairs += d.pairs;
      }
      EXPECT_EQ(c.max_delta, worst) << c.id;
      EXPECT_EQ(c.pairs, pairs) << c.id;
    }
    EXPECT_LE(a.find("3.1.i")->max_delta, 1e-9);
    EXPECT_LE(a.find("4.1.i")->max_delta, 1e-9);
    EXPECT_LE(a.find("4.1.ii")->max_delta, 1e-9);
  }
}

TEST(Audit, Notes) {
  const AuditReport r = audit_theorems(testing::k3());
  for (const char* id : {"3.1.ii", "3.1.iii", "3.1.iv", "3.1.v", "4.1.v", "4.1.vi", "4.1.vii", "4.1.viii"}) {
    EXPECT_FALSE(r.find(id)->notes.empty()) << id;
  }
  bool side_condition = false;
  for (const auto& note : r.find("3.1.v")->notes) side_condition |= note.find("B2 B1^T") != std::string::npos;
  EXPECT_TRUE(side_condition);
}

TEST(Audit, Disconnected) {
  EXPECT_THROW(audit_theorems(Graph(4, {{0, 1}, {2, 3}})), DisconnectedGraphError);
}

}  // namespace
}  // namespace klab
