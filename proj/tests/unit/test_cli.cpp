#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "halfcube/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = halfcube::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, Faces) {
    const auto r = run({"faces", "--n", "4"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("dim 3: simplex 8, demicube 8"), std::string::npos);
    EXPECT_EQ(r.out.substr(r.out.rfind("dim ")), "dim 4: demicube 1\n");
    EXPECT_EQ(run({"faces", "--n", "3"}).code, 2);
    EXPECT_EQ(run({"faces", "--n", "9"}).code, 2);
    EXPECT_EQ(run({"faces", "--n", "9", "--max-n", "9"}).code, 0);

    const auto j = nlohmann::json::parse(run({"faces", "--n", "8", "--json"}).out);
    EXPECT_EQ(j["command"], "faces");
    EXPECT_EQ(j["format_version"], 1);
    EXPECT_TRUE(j["payload"]["matches_formula"].get<bool>());
    EXPECT_FALSE(j.contains("timing"));
    const auto csv = run({"--csv", "faces", "--n", "4", "--dim", "3"}).out;
    EXPECT_EQ(csv, "dim,kind,measured,formula\n3,simplex,8,8\n3,demicube,8,8\n");
}

TEST(Cli, Homology) {
    auto r = run({"homology", "--n", "4", "--k", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("H_2 = Z^7"), std::string::npos);
    EXPECT_NE(r.out.find("verdict: pass"), std::string::npos);
    r = run({"homology", "--n", "5", "--k", "5"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("H_4 = Z\n"), std::string::npos);
    r = run({"homology", "--n", "9", "--k", "3"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("budget"), std::string::npos);
    EXPECT_EQ(run({"homology", "--n", "5", "--k", "2"}).code, 2);
    EXPECT_EQ(run({"homology", "--n", "5"}).code, 2);
}

TEST(Cli, Character) {
    auto r = run({"character", "--n", "4", "--k", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("{1,1,1|1}  degree 4"), std::string::npos);
    EXPECT_NE(r.out.find("{2,1,1|0}  degree 3"), std::string::npos);
    r = run({"character", "--n", "4", "--k", "3", "--restrict-sn"});
    EXPECT_NE(r.out.find("restriction to S_4: [1,1,1,1] + 2*[2,1,1]"), std::string::npos);
    r = run({"character", "--n", "5", "--k", "3", "--branch"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("equal: true"), std::string::npos);
    const auto j = nlohmann::json::parse(run({"character", "--n", "5", "--k", "4", "--values", "--json"}).out);
    EXPECT_EQ(j["payload"]["values"].size(), 18u);
    EXPECT_EQ(run({"character", "--n", "5", "--k", "5", "--branch"}).code, 2);
    EXPECT_EQ(run({"character", "--n", "7", "--k", "3", "--values"}).code, 2);
}

TEST(Cli, BettiAndLr) {
    auto r = run({"betti", "--n", "5", "--csv"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("5,3,31,31,31"), std::string::npos);
    EXPECT_NE(r.out.find("5,4,9,9,9"), std::string::npos);
    EXPECT_EQ(run({"betti", "--n", "30", "--k", "15"}).code, 0);
    EXPECT_EQ(run({"betti", "--n", "5", "--method", "guess"}).code, 2);
    r = run({"lr", "--mu", "2,1", "--nu", "2,1", "--lambda", "3,2,1"});
    EXPECT_NE(r.out.find("= 2"), std::string::npos);
    const auto j = nlohmann::json::parse(run({"lr", "--mu", "1", "--nu", "1", "--json"}).out);
    EXPECT_EQ(j["payload"]["product"]["[2]"], 1);
    EXPECT_EQ(j["payload"]["product"]["[1,1]"], 1);
    EXPECT_EQ(run({"lr", "--mu", "1,2", "--nu", "1"}).code, 2);
}

TEST(Cli, Verify) {
    auto r = run({"verify", "--suite", "theorem44", "--n-max", "4"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
    EXPECT_EQ(run({"verify", "--suite", "bogus"}).code, 2);
    EXPECT_EQ(run({"verify", "--suite", "chain", "--n-max", "7"}).code, 2);
    EXPECT_EQ(run({"verify", "--suite", "chain", "--n-max", "3"}).code, 2);
}

TEST(Cli, DeterministicJsonAndOutFile) {
    const std::vector<std::string> args{"--json", "verify", "--suite", "branching", "--n-max", "6", "--threads", "3"};
    const auto a = run(args), b = run(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.code, 0);
    const auto path = (std::filesystem::temp_directory_path() / "halfcube_cli_out.json").string();
    auto args_out = args;
    args_out.insert(args_out.end(), {"--out", path});
    const auto c = run(args_out);
    EXPECT_TRUE(c.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(ss.str(), a.out);
    std::filesystem::remove(path);
    // Timing is opt-in and stays outside the payload.
    const auto t = nlohmann::json::parse(run({"--json", "--timing", "faces", "--n", "4"}).out);
    EXPECT_TRUE(t.contains("timing"));
    EXPECT_FALSE(t["payload"].contains("timing"));
}

TEST(Cli, EnvironmentFallsBehindFlags) {
    ::setenv("HALFCUBE_MAX_N", "9", 1);
    EXPECT_EQ(run({"faces", "--n", "9"}).code, 0);
    EXPECT_EQ(run({"faces", "--n", "9", "--max-n", "8"}).code, 2);
    ::unsetenv("HALFCUBE_MAX_N");
    EXPECT_EQ(run({"faces", "--n", "9"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}
