// Copyright 2026 The dqc1-correlations Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "dqc1/io.hpp"
#include "dqc1/randomness.hpp"

namespace dqc1 {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
    args.push_back("--format");
    args.push_back("json");
    const Result r = run(args);
    EXPECT_TRUE(r.code == cli::kExitOk || r.code == cli::kExitFalsified) << r.err;
    return json::parse(r.out);
}

class TempDir : public ::testing::Test {
  protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("dqc1_cli_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }
    std::string path(const std::string &name) const { return (dir_ / name).string(); }
    fs::path dir_;
};

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, cli::kExitUsage);
    EXPECT_EQ(run({"nope"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"fig1", "--n", "5"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"thm1", "--n", "4"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"tree-edge", "--leaves", "5"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"fig1", "--format", "xml"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"thm2", "--n", "9"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"thm2", "--n", "3", "--ranks", "1000"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"trace"}).code, cli::kExitUsage);
}

TEST(Cli, HelpIsSuccess) {
    const Result r = run({"--help"});
    EXPECT_EQ(r.code, cli::kExitOk);
    EXPECT_NE(r.out.find("tree-edge"), std::string::npos);
}

TEST(Cli, Fig1CsvShape) {
    const Result r = run({"fig1", "--n", "4", "--seeds", "3", "--seed", "9"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    EXPECT_NE(r.out.find("# master_seed=9\n"), std::string::npos);
    EXPECT_NE(r.out.find("\nn,seed,min_rank,log2_min_rank\n"), std::string::npos);
    EXPECT_NE(r.out.find("\n4,median,"), std::string::npos);
    std::istringstream lines(r.out);
    std::string line;
    int rows = 0;
    while (std::getline(lines, line)) {
        if (line.rfind("4,", 0) == 0 && line.find("median") == std::string::npos) {
            ++rows;
            const int rank = std::stoi(line.substr(line.find(',', 2) + 1));
            EXPECT_LE(rank, 4);
        }
    }
    EXPECT_EQ(rows, 3);
}

TEST(Cli, GlobalFlagsBeforeOrAfterSubcommand) {
    const Result a = run({"--seed", "5", "fig1", "--n", "4", "--seeds", "2"});
    const Result b = run({"fig1", "--n", "4", "--seeds", "2", "--seed", "5"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, Determinism) {
    const std::vector<std::string> args{"fig1", "--n", "4,6", "--seeds", "3"};
    const Result a = run(args);
    const Result b = run(args);
    auto four = args;
    four.insert(four.end(), {"--workers", "4"});
    const Result c = run(four);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out, c.out);
    const Result other = run({"fig1", "--n", "4,6", "--seeds", "3", "--seed", "2"});
    EXPECT_NE(a.out, other.out);
}

TEST(Cli, Thm1HaarPasses) {
    const json j = run_json({"thm1", "--n", "6", "--cuts", "6"});
    EXPECT_TRUE(j["summary"]["pass"].get<bool>());
    EXPECT_EQ(j["summary"]["global_bound"].get<int>(), 4);
    EXPECT_EQ(j["rows"].size(), 6u);
    EXPECT_EQ(j["master_seed"].get<int>(), 1);
}

TEST(Cli, Thm1TauZeroBoundIsOne) {
    const Result r = run({"thm1", "--n", "6", "--cuts", "4", "--tau", "0"});
    EXPECT_EQ(r.code, cli::kExitFalsified);
    const json j = json::parse(r.out);
    EXPECT_EQ(j["summary"]["min_rank"].get<int>(), 1);
}

TEST(Cli, Thm1ProductUnitaryFails) {
    const Result r = run({"thm1", "--n", "6", "--mode", "product", "--exhaustive"});
    EXPECT_EQ(r.code, cli::kExitFalsified);
    const json j = json::parse(r.out);
    EXPECT_FALSE(j["summary"]["pass"].get<bool>());
    EXPECT_NE(j["summary"]["explanation"].get<std::string>().find("single-qubit"), std::string::npos);
}

TEST(Cli, Lemma4TrivialSubsystem) {
    const json j = run_json({"lemma4", "--na", "0", "--nb", "3", "--samples", "5"});
    EXPECT_DOUBLE_EQ(j["summary"]["fraction_within"].get<double>(), 1.0);
    EXPECT_TRUE(j["summary"]["nonzero_count_equals_d_a"].get<bool>());
}

TEST(Cli, TreeEdgeBalanced) {
    const Result r = run({"tree-edge", "--leaves", "8", "--trees", "2", "--shape", "balanced"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    EXPECT_NE(r.out.find("\n0,"), std::string::npos);
    // every data row reports n_0 = 2 and window [2, 2]
    std::istringstream lines(r.out);
    std::string line;
    int rows = 0;
    while (std::getline(lines, line)) {
        if (!line.empty() && std::isdigit(static_cast<unsigned char>(line[0]))) {
            ++rows;
            EXPECT_EQ(line.substr(line.size() - 6), ",2,2,2");
        }
    }
    EXPECT_EQ(rows, 2);
}

TEST(Cli, Thm2FullSweep) {
    const Result r = run({"thm2", "--n", "4", "--format", "json"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    const json j = json::parse(r.out);
    const auto &rows = j["rows"];
    ASSERT_FALSE(rows.empty());
    EXPECT_NEAR(rows.back()["F"].get<double>(), 1.0, 1e-12);
    for (const auto &row : rows) {
        EXPECT_TRUE(row["bound_satisfied"].get<bool>());
    }
}

TEST(Cli, Thm2ExplicitCutAndRanks) {
    const json j = run_json({"thm2", "--n", "4", "--cut", "2", "--ranks", "1,3"});
    EXPECT_EQ(j["config"]["cut"].get<std::string>(), "{0,2}:{1,3,4}");
    ASSERT_EQ(j["rows"].size(), 2u);
    EXPECT_EQ(j["rows"][1]["r"].get<int>(), 3);
}

TEST_F(TempDir, TraceFromCmatAndCircuit) {
    {
        std::ofstream f(path("id.cmat"));
        write_cmat(f, Matrix::Identity(4, 4));
    }
    json j = run_json({"trace", "--cmat", path("id.cmat"), "--shots", "1000"});
    EXPECT_DOUBLE_EQ(j["summary"]["exact"]["re"].get<double>(), 1.0);
    EXPECT_DOUBLE_EQ(j["summary"]["estimate"]["re"].get<double>(), 1.0);

    Gate4 xx = Gate4::Zero();
    xx(0, 3) = xx(1, 2) = xx(2, 1) = xx(3, 0) = 1.0;
    Circuit c(3);
    c.add_gate(xx, 0, 1);
    c.add_gate(xx, 1, 2);
    {
        std::ofstream f(path("xx.txt"));
        write_circuit(f, c);
    }
    j = run_json({"trace", "--circuit", path("xx.txt"), "--qubits", "3"});
    EXPECT_DOUBLE_EQ(j["summary"]["exact"]["re"].get<double>(), 0.0);
    EXPECT_EQ(j["config"]["qubits"].get<int>(), 3);
}

TEST_F(TempDir, TraceRejectsBadInput) {
    {
        std::ofstream f(path("bad.cmat"));
        write_cmat(f, 1.01 * Matrix::Identity(2, 2));
    }
    EXPECT_EQ(run({"trace", "--cmat", path("bad.cmat")}).code, cli::kExitUsage);
    {
        std::ofstream f(path("id.cmat"));
        write_cmat(f, Matrix::Identity(2, 2));
    }
    EXPECT_EQ(run({"trace", "--cmat", path("id.cmat"), "--tau", "0"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"trace", "--cmat", path("missing.cmat")}).code, cli::kExitIo);
    {
        std::ofstream f(path("garbage.cmat"));
        f << "not a matrix\n";
    }
    EXPECT_EQ(run({"trace", "--cmat", path("garbage.cmat")}).code, cli::kExitUsage);
}

TEST_F(TempDir, OutFile) {
    const Result r = run({"tree-edge", "--trees", "3", "--out", path("t.csv")});
    EXPECT_EQ(r.code, cli::kExitOk);
    EXPECT_TRUE(r.out.empty());
    std::ifstream f(path("t.csv"));
    std::stringstream ss;
    ss << f.rdbuf();
    EXPECT_EQ(ss.str(), run({"tree-edge", "--trees", "3"}).out);
    EXPECT_EQ(run({"tree-edge", "--out", path("no/such/dir/x.csv")}).code, cli::kExitIo);
}

} // namespace
} // namespace dqc1
