#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "skein/cli.hpp"

namespace skein {
namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

TEST(Cli, MulChebyshev) {
    const Result r = run({"mul", "--basis", "chebyshev", "(1,0)", "(0,1)"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "A (1,-1)_T + A^-1 (1,1)_T\n");
}

TEST(Cli, MulStandard) {
    const Result r = run({"mul", "(1,1)", "(1,-1)"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "(-2A^-2 - 2A^2) + A^-2 (0,2) + A^2 (2,0)\n");
}

TEST(Cli, Bracket) {
    const Result r = run({"bracket", "--pd", "X(1,3,2,4) X(3,1,4,2)"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "A^-6 + A^-2 + A^2 + A^6\n");
    EXPECT_EQ(run({"bracket", "--pd", R"({"crossings":[[1,3,2,4],[3,1,4,2]]})", "--json"}).out,
              "{\"-2\":1,\"-6\":1,\"2\":1,\"6\":1}\n");
}

TEST(Cli, Verify) {
    const Result r = run({"verify", "--max-coord", "2", "--max-det", "6"});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_NE(r.out.find("PASS"), std::string::npos);
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, OtherSubcommands) {
    EXPECT_EQ(run({"cheb", "(3,0)"}).out, "-3 (1,0) + (3,0)\n");
    EXPECT_EQ(run({"convert", "(2,0)"}).out, "2 + (2,0)_T\n");
    EXPECT_EQ(run({"convert", "(2,0)_T"}).out, "-2 + (2,0)\n");
    EXPECT_EQ(run({"psi", "(2,0)"}).out, "g(-2,0) + 2 + g(2,0)\n");
    EXPECT_EQ(run({"psi", "--basis", "chebyshev", "(2,0)"}).out, "g(-2,0) + g(2,0)\n");
    EXPECT_EQ(run({"psi-inv", "g(1,1) + g(-1,-1)"}).out, "(1,1)_T\n");
    EXPECT_EQ(run({"gamma-mul", "g(1,0)", "g(0,1)"}).out, "A^-1 g(1,1)\n");
    EXPECT_EQ(run({"gamma-mul", "--oracle", "g(1,0)", "g(0,1)"}).out, "A^-1 g(1,1)\n");
    EXPECT_EQ(run({"oracle-mul", "--workers", "2", "(1,0)", "(0,1)"}).out, "A (1,-1) + A^-1 (1,1)\n");
}

TEST(Cli, DumpStates) {
    const std::string path = ::testing::TempDir() + "skein_states.txt";
    const Result r = run({"oracle-mul", "--dump-states", path, "(1,0)", "(0,1)"});
    EXPECT_EQ(r.code, 0);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(ss.str(), "0 1 0 (1,-1)\n1 -1 0 (1,1)\n");
    std::remove(path.c_str());
}

TEST(Cli, JsonRoundTrips) {
    const std::string x = run({"mul", "--json", "(1,0)", "(0,1)"}).out;
    EXPECT_EQ(x, "{\"basis\":\"standard\",\"terms\":[{\"class\":[1,-1],\"coeff\":{\"1\":1}},"
                 "{\"class\":[1,1],\"coeff\":{\"-1\":1}}]}\n");
    // Feed the JSON back in and convert.
    const Result back = run({"convert", x});
    EXPECT_EQ(back.code, 0);
    EXPECT_EQ(back.out, "A (1,-1)_T + A^-1 (1,1)_T\n");
    const std::string g = run({"gamma-mul", "--json", "g(1,0)", "g(0,1)"}).out;
    EXPECT_EQ(run({"gamma-mul", g, "g(0,0)"}).out, "A^-1 g(1,1)\n");
    const std::string p = run({"psi", "--json", "(1,1)"}).out;
    EXPECT_EQ(run({"psi-inv", p}).out, "(1,1)_T\n");
    EXPECT_EQ(run({"cheb", "--json", "(2,0)"}).out,
              "{\"basis\":\"standard\",\"terms\":[{\"class\":\"empty\",\"coeff\":{\"0\":-2}},"
              "{\"class\":[2,0],\"coeff\":{\"0\":1}}]}\n");
    const std::string v = run({"verify", "--json", "--max-coord", "1", "--max-det", "2"}).out;
    const Json report = Json::parse(v);
    ASSERT_TRUE(report.is_array());
    for (const auto& c : report) EXPECT_EQ(c.at("failures"), 0);
}

TEST(Cli, VerifyIsDeterministicAcrossWorkers) {
    const Result one = run({"verify", "--json", "--max-coord", "2", "--max-det", "6", "--workers", "1"});
    const Result many = run({"verify", "--json", "--max-coord", "2", "--max-det", "6", "--workers", "3"});
    EXPECT_EQ(one.code, 0);
    EXPECT_EQ(one.out, many.out);
}

TEST(Cli, VerificationFailureExitsTwo) {
    CheckResult bad{"synthetic"};
    bad.record(true, [] { return std::string(); });
    bad.record(false, [] { return std::string("(1,0) * (0,1)"); });
    bad.record(false, [] { return std::string("second"); });
    std::ostringstream out, err;
    EXPECT_EQ(cli::detail::report_verification({bad}, false, out, err), 2);
    EXPECT_EQ(out.str(), "FAIL synthetic (3 cases)\n");
    EXPECT_EQ(err.str(), "counterexample (synthetic): (1,0) * (0,1)\n");
    std::ostringstream jout, jerr;
    EXPECT_EQ(cli::detail::report_verification({bad}, true, jout, jerr), 2);
    EXPECT_EQ(Json::parse(jout.str())[0].at("failures"), 2);
}

TEST(Cli, UserErrorsExitOne) {
    EXPECT_EQ(run({}).code, 1);
    EXPECT_EQ(run({"frobnicate"}).code, 1);
    EXPECT_EQ(run({"mul", "(1,0)"}).code, 1);
    const Result bad = run({"mul", "(1,0", "(0,1)"});
    EXPECT_EQ(bad.code, 1);
    EXPECT_NE(bad.err.find("error"), std::string::npos);
    EXPECT_EQ(run({"mul", "--basis", "weird", "(1,0)", "(0,1)"}).code, 1);
    EXPECT_EQ(run({"psi-inv", "g(1,0)"}).code, 1);
    EXPECT_EQ(run({"oracle-mul", "--budget", "4", "(1,2)", "(3,1)"}).code, 1);
    EXPECT_EQ(run({"bracket", "--pd", "X(1,2,3,4)"}).code, 1);
    EXPECT_EQ(run({"bracket"}).code, 1);
    EXPECT_EQ(run({"convert", "{\"basis\": 3}"}).code, 1);
    EXPECT_EQ(run({"convert", "{not json"}).code, 1);
    EXPECT_EQ(run({"mul", "(1,0)_T", "(1,0)"}).code, 1);
}

TEST(Cli, Help) {
    const Result r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("bracket"), std::string::npos);
}

}  // namespace
}  // namespace skein
