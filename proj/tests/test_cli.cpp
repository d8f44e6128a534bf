#include <gtest/gtest.h>

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "pilat/cli.hpp"

using namespace pilat;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
    const std::string path = ::testing::TempDir() + name;
    std::ofstream(path) << text;
    return path;
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST(Cli, Enumerate) {
    const auto r = run({"enumerate", "--n", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "0 1 2\n0 1|2\n0 2|1\n0|1 2\n0|1|2\n");
    const auto j = nlohmann::json::parse(run({"enumerate", "--n", "2", "--out", "json"}).out);
    EXPECT_EQ(j.at("partitions").size(), 2u);
    EXPECT_NE(run({"enumerate", "--n", "4", "--count"}).out.find("bell 15"), std::string::npos);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, kExitUsage);
    EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
    EXPECT_EQ(run({"enumerate"}).code, kExitUsage);
    EXPECT_EQ(run({"enumerate", "--n", "3", "--bogus"}).code, kExitUsage);
    EXPECT_EQ(run({"enumerate", "--n", "13"}).code, kExitUsage);
    EXPECT_EQ(run({"complements", "list", "0 1|1 2"}).code, kExitUsage);
    const auto r = run({"hasse", "--n", "9"});
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_NE(r.err.find("cap"), std::string::npos);
}

TEST(Cli, ChainsVerifyExitCodes) {
    const auto good = write_temp("chain_good.txt", "0|1|2\n0 1|2\n0 1 2\n");
    const auto gap = write_temp("chain_gap.txt", "0|1|2\n0 1 2\n");
    const auto bad = write_temp("chain_bad.txt", "0 1|2\n0 2|1\n");
    EXPECT_EQ(run({"chains", "verify", good, "--maximal"}).code, kExitOk);
    EXPECT_EQ(run({"chains", "verify", gap}).code, kExitOk);
    EXPECT_EQ(run({"chains", "verify", gap, "--maximal"}).code, kExitCheckFailed);
    const auto r = run({"chains", "verify", bad});
    EXPECT_EQ(r.code, kExitCheckFailed);
    EXPECT_NE(r.out.find("failing_pair 0,1"), std::string::npos);
    EXPECT_EQ(run({"chains", "verify", "/nonexistent/file"}).code, kExitUsage);
}

TEST(Cli, ChainsExtendAndKeyframe) {
    const auto gap = write_temp("chain_gap4.txt", "0|1|2|3\n0 1 2 3\n");
    const auto r = run({"chains", "extend", gap});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(count_lines(r.out), 4u);
    EXPECT_EQ(run({"chains", "keyframe", "--k", "2"}).out, "0|1|2|3\n0|1|2 3\n0 1|2 3\n0 1 2 3\n");
    EXPECT_NE(run({"chains", "maximal", "--n", "4"}).out.find("maximal_chains 18"), std::string::npos);
}

TEST(Cli, Antichains) {
    const auto r = run({"antichains", "bipartition", "--n", "4", "--verify"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("# maximal yes"), std::string::npos);
    const auto small = write_temp("anti_small.txt", "0 1|2|3\n");
    EXPECT_EQ(run({"antichains", "verify", small}).code, kExitCheckFailed);
    const auto x = run({"antichains", "extend", small});
    EXPECT_EQ(x.code, 0);
    const auto extended = write_temp("anti_ext.txt", x.out);
    EXPECT_EQ(run({"antichains", "verify", extended}).code, 0);
}

TEST(Cli, Census) {
    const auto r = run({"complements", "census", "--n", "4", "--out", "csv"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(count_lines(r.out), 17u);  // version comment, header, 15 rows
    EXPECT_EQ(r.out.rfind("# pilat", 0), 0u);
    EXPECT_NE(r.out.find("partition,m,block_sizes,total,count_nm1,grieser\n"), std::string::npos);
    EXPECT_NE(r.out.find("0 1|2 3,2,2+2,6,4,4\n"), std::string::npos);
    EXPECT_EQ(run({"complements", "census", "--n", "5", "--out", "csv", "--jobs", "3"}).out,
              run({"complements", "census", "--n", "5", "--out", "csv", "--jobs", "1"}).out);
    const auto l = run({"complements", "list", "0 1|2"});
    EXPECT_EQ(l.out, "0 2|1\n0|1 2\n# total 2\n# grieser 2\n");
}

TEST(Cli, Ortho) {
    const auto r = run({"ortho", "search", "--n", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "none\n");
    EXPECT_EQ(run({"ortho", "search", "--n", "2"}).out.rfind("found", 0), 0u);
    EXPECT_NE(run({"ortho", "witness", "--n", "5"}).out.find("coatoms 15"), std::string::npos);
    EXPECT_EQ(run({"ortho", "witness", "--n", "4"}).code, kExitUsage);
}

TEST(Cli, Cardinal) {
    const auto r = run({"cardinal", "eval", "complements(shape(full=1,kappa=aleph(0),lambda=fin(3)))", "--model", "gch"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "aleph(0)\n");
    const auto model = write_temp("easton.json", R"({"gch": false, "continuum": {"1": "3", "2": "3"}})");
    EXPECT_EQ(run({"cardinal", "eval", "complements(shape(full=1,kappa=aleph(2),lambda=aleph(1)))", "--model", model}).out,
              "aleph(3)\n");
    const auto bad = write_temp("bad_model.json", R"({"gch": false, "continuum": {"2": "1"}})");
    EXPECT_EQ(run({"cardinal", "eval", "pow(2,aleph(0))", "--model", bad}).code, kExitUsage);
}

TEST(Cli, HasseAndOutputFile) {
    const std::string path = ::testing::TempDir() + "pilat_hasse.dot";
    const auto r = run({"--output", path, "hasse", "--n", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    EXPECT_EQ(buf.str(), run({"hasse", "--n", "3"}).out);
    EXPECT_EQ(run({"hasse"}).code, kExitUsage);
}
