#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "report.hpp"

using namespace cyclocode;
using nlohmann::ordered_json;

namespace {

struct Result {
    int rc = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Result run_cli(const std::string& args) {
    static int counter = 0;
    const auto dir = std::filesystem::temp_directory_path();
    const auto tag = std::to_string(::getpid()) + "_" + std::to_string(counter++);
    const auto out = dir / ("cyclocode_out_" + tag);
    const auto err = dir / ("cyclocode_err_" + tag);
    const std::string cmd = std::string(CYCLOCODE_CLI) + " " + args + " >" + out.string() + " 2>" + err.string();
    const int status = std::system(cmd.c_str());
    Result r;
    r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    std::filesystem::remove(out);
    std::filesystem::remove(err);
    return r;
}

std::set<std::string> keys(const ordered_json& j) {
    std::set<std::string> s;
    for (const auto& [k, v] : j.items()) s.insert(k);
    return s;
}

}  // namespace

TEST(CliWeights, BothMethodsReportMatch) {
    const Result r = run_cli("weights -p 2 -e 2 -k 3 --e1 1 --e2 1 --method both --threads 2");
    ASSERT_EQ(r.rc, 0) << r.err;
    const auto j = ordered_json::parse(r.out);
    EXPECT_EQ(keys(j), (std::set<std::string>{"spec", "method", "distribution", "min_distance", "lower_bound",
                                              "griesmer_optimal", "dual_distance", "verdict", "ms"}));
    EXPECT_EQ(keys(j["spec"]), (std::set<std::string>{"p", "e", "k", "e1", "e2", "q", "n", "dim", "d"}));
    EXPECT_EQ(j["verdict"], "match");
    EXPECT_EQ(j["griesmer_optimal"], true);
    EXPECT_EQ(j["min_distance"], 47);
    EXPECT_TRUE(j["dual_distance"].is_null());
    const auto rep = cli::report_from_json(j);
    EXPECT_EQ(rep.distribution.enumerator(), "1+189z^47+63z^48+3z^63");
    u64 prev = 0;
    for (const auto& [w, c] : rep.distribution.entries) {
        EXPECT_TRUE(w == 0 || w > prev);
        prev = w;
    }
}

TEST(CliWeights, DeterministicApartFromTiming) {
    const std::string args = "weights -p 3 -e 1 -k 4 --e1 1 --e2 3 --method both --dual";
    auto a = ordered_json::parse(run_cli(args).out);
    auto b = ordered_json::parse(run_cli(args).out);
    EXPECT_EQ(a["dual_distance"], "3");
    a.erase("ms");
    b.erase("ms");
    EXPECT_EQ(a.dump(), b.dump());
}

TEST(CliWeights, JsonRoundTrip) {
    const CodeSpec s = validate_spec(5, 1, 3, 1, 3);
    const cli::RunReport r = cli::run(s, {cli::Method::Both, 1, true, {}});
    const auto j = cli::to_json(r);
    const cli::RunReport back = cli::report_from_json(ordered_json::parse(j.dump()));
    EXPECT_EQ(back, r);
    EXPECT_EQ(cli::to_json(back).dump(), j.dump());
}

TEST(CliWeights, TheoryEnumerator) {
    const Result r = run_cli("weights -p 5 -e 1 -k 5 --method theory --enumerator");
    ASSERT_EQ(r.rc, 0);
    EXPECT_EQ(r.out, "1+3124z^2444+3124z^2484+3124z^2500+3124z^2504+3124z^2564+4z^3124\n");
}

TEST(CliWeights, HighOrderCharacterIsAnError) {
    const Result r = run_cli("weights -p 11 -e 1 -k 3 --e1 2 --e2 1 --method theory");
    EXPECT_EQ(r.rc, 1);
    EXPECT_NE(r.err.find("d = 5"), std::string::npos);
    EXPECT_NE(r.err.find("open problem"), std::string::npos);
    // brute force stays available
    EXPECT_EQ(run_cli("weights -p 11 -e 1 -k 3 --e1 2 --e2 1 --method brute").rc, 0);
}

TEST(CliWeights, ValidationErrorsNameTheCondition) {
    Result r = run_cli("weights -p 3 -e 1 -k 3 --e1 1 --e2 13");
    EXPECT_EQ(r.rc, 1);
    EXPECT_NE(r.err.find("gcd((q^k-1)/(q-1), e2)"), std::string::npos) << r.err;
    r = run_cli("weights -p 4 -k 3");
    EXPECT_EQ(r.rc, 1);
    EXPECT_NE(r.err.find("not prime"), std::string::npos);
    EXPECT_EQ(run_cli("weights -p 3 -k 3 --method magic").rc, 1);
    EXPECT_EQ(run_cli("weights -k 3").rc, 1);
    EXPECT_EQ(run_cli("").rc, 1);
    EXPECT_EQ(run_cli("--help").rc, 0);
}

TEST(CliWeights, MismatchExitsTwo) {
    // 1 has norm 1, not q, so it is not a cubic Jacobi sum of GF(7)
    Result r = run_cli("weights -p 7 -k 2 --e2 5 --cubic-jacobi 1,0");
    EXPECT_EQ(r.rc, 2);
    EXPECT_EQ(ordered_json::parse(r.out)["verdict"], "mismatch");
    EXPECT_NE(r.err.find("weight"), std::string::npos);
    // an associate of the true sum changes nothing
    r = run_cli("weights -p 7 -k 2 --e2 5 --cubic-jacobi 2,3");
    EXPECT_EQ(r.rc, 0);
}

TEST(CliVerify, DefaultRun) {
    const Result r = run_cli("verify --dual --threads 2");
    EXPECT_EQ(r.rc, 0) << r.out;
    EXPECT_NE(r.out.find("9/9 registered codes match"), std::string::npos);
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
    EXPECT_NE(r.out.find("q4-k3-d1 dual distance: 3"), std::string::npos);
}

TEST(CliVerify, Sweep) {
    Result r = run_cli("verify --sweep q=3,k=3,e-max=6");
    EXPECT_EQ(r.rc, 0);
    EXPECT_NE(r.out.find("27/27 checks pass"), std::string::npos) << r.out;
    EXPECT_EQ(run_cli("verify --sweep q=6,k=3,e-max=2").rc, 1);
    EXPECT_EQ(run_cli("verify --sweep q=3,k=3").rc, 1);
}

TEST(CliCharSums, Jacobi) {
    Result r = run_cli("jacobi -q 7");
    EXPECT_EQ(r.rc, 0);
    EXPECT_NE(r.out.find("A=1 B=1"), std::string::npos);
    r = run_cli("jacobi -q 19");
    EXPECT_NE(r.out.find("A=7 "), std::string::npos);
    r = run_cli("jacobi -q 13");
    EXPECT_NE(r.out.find("m=3 n=2"), std::string::npos);
    EXPECT_EQ(run_cli("jacobi -q 11").rc, 1);
}

TEST(CliCharSums, Gauss) {
    Result r = run_cli("gauss -p 5 -e 1 --order 2");
    EXPECT_EQ(r.rc, 0);
    EXPECT_NE(r.out.find("exact: sqrt(5)"), std::string::npos);
    EXPECT_NE(r.out.find("G = 2.236068"), std::string::npos);
    r = run_cli("gauss -p 3 --order 2");
    EXPECT_NE(r.out.find("exact: i*sqrt(3)"), std::string::npos);
    EXPECT_EQ(run_cli("gauss -p 7 --order 5").rc, 1);
}

TEST(CliTable, CsvRows) {
    Result r = run_cli("table 17 -p 3 -e 2");
    ASSERT_EQ(r.rc, 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line.rfind("# template 17", 0), 0U);
    std::getline(in, line);
    EXPECT_EQ(line, "weight,frequency,label,merge");
    int rows = 0, merged = 0;
    while (std::getline(in, line)) {
        ++rows;
        if (line.find("merged x3 total 4368") != std::string::npos) ++merged;
    }
    EXPECT_EQ(rows, 7);
    EXPECT_EQ(merged, 3);

    r = run_cli("table 1 -p 2 -e 2 -k 3");
    ASSERT_EQ(r.rc, 0);
    EXPECT_NE(r.out.find("47,189,"), std::string::npos);
    EXPECT_NE(r.out.find("48,63,"), std::string::npos);
    EXPECT_NE(r.out.find("63,3,"), std::string::npos);
}

TEST(CliTable, Errors) {
    Result r = run_cli("table 19 -p 5 -e 1");
    EXPECT_EQ(r.rc, 1);
    EXPECT_NE(r.err.find("n = 0"), std::string::npos);
    EXPECT_EQ(run_cli("table 21 -p 5 -e 1").rc, 1);
    EXPECT_EQ(run_cli("table 2 -p 3 -e 1").rc, 1);
}
