#include <filesystem>
#include <fstream>
#include <sstream>

#include <gmock/gmock.h>
#include <gtest/gtest.h>
#include <json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;
using ::testing::HasSubstr;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = ewi::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
    fs::path dir;
    void SetUp() override {
        dir = fs::temp_directory_path() /
              ("ewi_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir);
    }
    void TearDown() override { fs::remove_all(dir); }
    std::string write(const std::string& name, const std::string& body) {
        const auto p = dir / name;
        std::ofstream(p) << body;
        return p.string();
    }
};

} // namespace

TEST_F(CliTest, ComputeAnthraceneFromGeneratedHexFile) {
    const std::string hex = (dir / "l3.hex").string();
    ASSERT_EQ(run({"generate", "polyacene", "--h", "3", "-o", hex}).code, ewi::cli::kOk);
    const Result r = run({"compute", hex, "--no-timing"});
    ASSERT_EQ(r.code, ewi::cli::kOk) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["m"], 16);
    EXPECT_EQ(j["edge_wiener"], 350);
    EXPECT_EQ(j["edge_hyper_wiener"], 812);
    EXPECT_EQ(j["method"], "benzenoid");
    EXPECT_TRUE(j["elapsed_ms"].is_null());
}

TEST_F(CliTest, OddCycleExitsRejected) {
    const std::string c5 = write("c5.txt", "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    const Result r = run({"compute", c5});
    EXPECT_EQ(r.code, ewi::cli::kRejected);
    EXPECT_THAT(r.err, HasSubstr("odd cycle"));
    EXPECT_EQ(run({"compute", c5, "--method", "naive"}).code, ewi::cli::kOk);
}

TEST_F(CliTest, NaiveAndCutAgreeOnHypercube) {
    const std::string q3 = (dir / "q3.txt").string();
    ASSERT_EQ(run({"generate", "family", "--kind", "hypercube", "--n", "3", "-o", q3}).code, ewi::cli::kOk);
    auto naive = nlohmann::json::parse(run({"compute", q3, "--method", "naive", "--no-timing"}).out);
    auto cut = nlohmann::json::parse(run({"compute", q3, "--method", "cut", "--no-timing"}).out);
    EXPECT_EQ(naive["method"], "naive");
    EXPECT_EQ(cut["method"], "generic-cut");
    naive.erase("method");
    cut.erase("method");
    EXPECT_EQ(naive, cut);
}

TEST_F(CliTest, TreeMethodRejectsCycle) {
    const std::string c4 = write("c4.txt", "4 4\n0 1\n1 2\n2 3\n3 0\n");
    EXPECT_EQ(run({"compute", c4, "--method", "tree"}).code, ewi::cli::kRejected);
    EXPECT_EQ(run({"compute", c4, "--method", "benzenoid"}).code, ewi::cli::kUsage);
}

TEST_F(CliTest, CsvAndSelectedIndices) {
    const std::string p3 = write("p3.txt", "3 2\n0 1\n1 2\n");
    const Result r = run({"compute", p3, "--output", "csv", "--indices", "w_e,ww_e", "--no-timing"});
    ASSERT_EQ(r.code, ewi::cli::kOk) << r.err;
    EXPECT_THAT(r.out, HasSubstr("edge_wiener,edge_hyper_wiener"));
    EXPECT_THAT(r.out, HasSubstr("\n2,1,1,tree,"));
}

TEST_F(CliTest, RandomBenzenoidIsDeterministic) {
    const Result a = run({"generate", "random-benzenoid", "--hexes", "9", "--seed", "5"});
    const Result b = run({"generate", "random-benzenoid", "--hexes", "9", "--seed", "5"});
    ASSERT_EQ(a.code, ewi::cli::kOk);
    EXPECT_EQ(a.out, b.out);
    EXPECT_FALSE(a.out.empty());
}

TEST_F(CliTest, VerifySuitesPass) {
    const Result r = run({"verify", "--suite", "all", "--max-h", "10", "--trees", "40", "--max-n", "20", "--samples",
                          "10", "--hexes", "8"});
    ASSERT_EQ(r.code, ewi::cli::kOk) << r.out;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_TRUE(j["passed"].get<bool>());
    EXPECT_EQ(j["suites"].size(), 3u);
}

TEST_F(CliTest, BenchReportsPolyaceneSizes) {
    const Result r = run({"bench", "--h", "2,5"});
    ASSERT_EQ(r.code, ewi::cli::kOk) << r.err;
    std::istringstream in(r.out);
    std::string header, row1, row2;
    std::getline(in, header);
    std::getline(in, row1);
    std::getline(in, row2);
    EXPECT_THAT(header, HasSubstr("h,m,edge_wiener"));
    EXPECT_THAT(row1, ::testing::StartsWith("2,11,"));
    EXPECT_THAT(row2, ::testing::StartsWith("5,26,"));
    EXPECT_THAT(row2, ::testing::EndsWith(",yes"));
}

TEST_F(CliTest, UsageErrors) {
    EXPECT_EQ(run({}).code, ewi::cli::kUsage);
    EXPECT_EQ(run({"compute"}).code, ewi::cli::kUsage);
    EXPECT_EQ(run({"compute", (dir / "missing.txt").string()}).code, ewi::cli::kUsage);
    EXPECT_EQ(run({"compute", write("x.txt", "2 1\n0 1\n"), "--method", "magic"}).code, ewi::cli::kUsage);
    EXPECT_EQ(run({"bench", "--h", "0"}).code, ewi::cli::kUsage);
    const Result bad = run({"compute", write("bad.txt", "0 1\n0 1\n")});
    EXPECT_EQ(bad.code, ewi::cli::kUsage);
    EXPECT_THAT(bad.err, HasSubstr("line 2"));
    EXPECT_EQ(run({"--help"}).code, ewi::cli::kOk);
}
