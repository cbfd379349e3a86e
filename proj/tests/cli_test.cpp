// SPDX-License-Identifier: Apache-2.0

// Runs the built klab binary as a subprocess.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code = -1;
  std::string out;
};

Outcome run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " \"" KLAB_CLI_PATH "\" " + args + " 2>/dev/null";
  Outcome r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<double> first_row(const std::string& csv) {
  std::vector<double> row;
  std::istringstream line(csv.substr(0, csv.find('\n')));
  std::string cell;
  while (std::getline(line, cell, ',')) row.push_back(std::stod(cell));
  return row;
}

void expect_k2_quad_row(const std::string& csv) {
  const std::vector<double> row = first_row(csv);
  ASSERT_EQ(row.size(), 4u);
  EXPECT_EQ(row[0], 0.0);
  EXPECT_NEAR(row[1], 0.75, 1e-12);
  EXPECT_NEAR(row[2], 0.75, 1e-12);
  EXPECT_NEAR(row[3], 1.0, 1e-12);
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("klab_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return "\"" + p.string() + "\"";
  }

  fs::path dir_;
};

TEST_F(Cli, TransformK2) {
  const std::string k2 = file("k2.txt", "0 1\n");
  Outcome q = run("transform " + k2 + " --kind quad");
  EXPECT_EQ(q.code, 0);
  EXPECT_EQ(q.out, "4 4\n0 1\n0 2\n2 3\n1 3\n");
  Outcome w = run("transform " + k2 + " --kind pent");
  EXPECT_EQ(w.code, 0);
  EXPECT_EQ(w.out.substr(0, 4), "5 5\n");
}

TEST_F(Cli, TransformToFile) {
  const std::string k2 = file("k2.txt", "0 1\n");
  const fs::path out = dir_ / "q.txt";
  EXPECT_EQ(run("transform " + k2 + " -o \"" + out.string() + "\"").code, 0);
  std::ifstream in(out);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "4 4");
}

TEST_F(Cli, InputErrors) {
  EXPECT_EQ(run("transform " + file("bad.txt", "0 x\n") + " --kind quad").code, 2);
  EXPECT_EQ(run("transform " + file("loop.txt", "1 1\n")).code, 2);
  EXPECT_EQ(run("transform \"" + (dir_ / "missing.txt").string() + "\"").code, 2);
  EXPECT_EQ(run("resist " + file("split.txt", "0 1\n2 3\n") + " --kind quad").code, 2);
  EXPECT_EQ(run("transform " + file("k2.txt", "0 1\n") + " --kind hex").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
}

TEST_F(Cli, ResistCsv) {
  Outcome r = run("resist " + file("k2.txt", "0 1\n") + " --kind quad --format csv");
  EXPECT_EQ(r.code, 0);
  expect_k2_quad_row(r.out);
}

TEST_F(Cli, ResistJsonPent) {
  Outcome r = run("resist " + file("k2.txt", "0 1\n") + " --kind pent --format json --check");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["n"], 5);
  EXPECT_EQ(j["kind"], "pent");
  EXPECT_NEAR(j["matrix"][0][1].get<double>(), 0.8, 1e-12);
}

TEST_F(Cli, Kirchhoff) {
  const std::string k2 = file("k2.txt", "0 1\n");
  EXPECT_EQ(run("kirchhoff " + k2 + " --kind quad").out, "5.00000000000\n");
  EXPECT_EQ(run("kirchhoff " + k2 + " --kind none").out, "1.00000000000\n");
  EXPECT_EQ(run("kirchhoff " + k2 + " --kind pent").out, "10.0000000000\n");
  EXPECT_EQ(run("kirchhoff " + file("p3.txt", "0 1\n1 2\n") + " --kind quad").out, "25.0000000000\n");
}

TEST_F(Cli, Stdin) {
  const std::string k2 = file("k2.txt", "0 1\n");
  EXPECT_EQ(run("kirchhoff - --kind quad < " + k2).out, "5.00000000000\n");
}

TEST_F(Cli, Verify) {
  Outcome r = run("verify --count 100 --n-max 10 --p 0.5 --seed 7 --tol 1e-8");
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["pass"], true);
  EXPECT_EQ(j["count"], 200);
  EXPECT_EQ(run("verify --count 0").code, 2);
  EXPECT_EQ(run("verify --n-max 1").code, 2);
  EXPECT_EQ(run("verify --p 0").code, 2);
}

TEST_F(Cli, VerifyToleranceFailureExitsOne) {
  // A negative tolerance cannot be met by any delta.
  EXPECT_EQ(run("verify --count 2 --tol -1").code, 1);
}

TEST_F(Cli, Audit) {
  Outcome r = run("audit " + file("k2.txt", "0 1\n") + " --kind quad");
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["clauses"].size(), 5u);
  for (int i = 0; i < 5; ++i) {
    static const char* ids[] = {"3.1.i", "3.1.ii", "3.1.iii", "3.1.iv", "3.1.v"};
    EXPECT_EQ(j["clauses"][i]["id"], ids[i]);
  }
  Outcome both = run("audit " + file("k3.txt", "0 1\n0 2\n1 2\n"));
  EXPECT_EQ(both.code, 0);
  EXPECT_EQ(nlohmann::json::parse(both.out)["clauses"].size(), 13u);
}

TEST_F(Cli, EnvironmentAndFlagPrecedence) {
  const std::string k2 = file("k2.txt", "0 1\n");
  EXPECT_EQ(run("kirchhoff " + k2, "KLAB_KIND=pent").out, "10.0000000000\n");
  EXPECT_EQ(run("kirchhoff " + k2 + " --kind quad", "KLAB_KIND=pent").out, "5.00000000000\n");
  Outcome csv = run("resist " + k2, "KLAB_FORMAT=csv");
  expect_k2_quad_row(csv.out);
  EXPECT_EQ(run("verify --count 1", "KLAB_COUNT=0").code, 0);
}

TEST_F(Cli, Help) {
  Outcome r = run("--help");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}

}  // namespace
