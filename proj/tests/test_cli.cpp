#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "json.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(BINSUM_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("reduce text output") {
    auto r = run("reduce --operator \"(n+1)*E - 2*(2*n+1)\" --a 1,1 --b 0,0");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("E - 1") != std::string::npos);
}

TEST_CASE("reduce json schema") {
    auto r = run(
        "reduce --operator \"4*(2*n+3)^2*(4*n+3)*E^2 - 2*(4*n+5)*(20*n^2+50*n+27)*E + "
        "9*(4*n+7)*(n+1)^2\" --a 1,1 --b 0,0 --format json --column");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == 1);
    CHECK(j["m"] == 2);
    CHECK(j["a"] == nlohmann::json::array({1, 1}));
    CHECK(j["lprime"]["text"] == "E - (k+1)/(2*(2*k+1))");
    CHECK(j["lprime"]["cleared"] == "(4*k+2)*E - (k+1)");
    CHECK(j["column"].size() == 2);
    CHECK(j["shifts"] == nlohmann::json::array({1, 1}));
}

TEST_CASE("reduce --matrix prints the full image") {
    // [RL] for L = E is [RE] itself
    auto r = run("reduce --operator \"E\" --a 1,1 --b 0,0 --matrix --format json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["matrix"].size() == 2);
    CHECK(j["matrix"][0][0] == "E + 1");
    CHECK(j["matrix"][0][1] == "(2*k+1)/(k+1)");
    CHECK(j["matrix"][1][0] == "2*E");
    CHECK(j["matrix"][1][1] == "(k+1)/(k+2)*E + 1");
}

TEST_CASE("expand json schema") {
    auto r = run("expand --a 2,3 --b -1,4 --format json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == 1);
    CHECK(j["m"] == 2);
    CHECK(j["b"] == nlohmann::json::array({"-1", "4"}));
    REQUIRE(j["E"].size() == 2);
    CHECK(j["E"][0].size() == 7);
    CHECK(j["E"][0][0] == "1");
    CHECK(j["E"][1][3] == "(131*k^2-39*k+214)/(18*(k^2+k))");
    CHECK(j["X"][1] == nlohmann::json::array({"1/3*k-4/3", "1/3*k+1/3"}));
}

TEST_CASE("verify passes and fails with the right exit codes") {
    auto good = run("verify --operator \"E^2 - E - 1\" --a 1 --b 0 --initial 0,1 --nmax 20");
    CHECK(good.exit_code == 0);
    CHECK(good.out.find("PASS") != std::string::npos);

    // h_k = k! is not a definite-sum solution kernel for E - (n+1)
    auto bad = run(
        "verify --operator \"E - (n+1)\" --a 1 --b 0 "
        "--hseq 1,1,2,6,24,120,720,5040,40320,362880,3628800,39916800,479001600,6227020800,"
        "87178291200 --nmax 12 --format json");
    CHECK(bad.exit_code == 1);
    auto j = nlohmann::json::parse(bad.out);
    CHECK(j["pass"] == false);
    CHECK(j["schema"] == 1);

    auto usage = run("verify --operator \"E - q\" --a 1 --b 0");
    CHECK(usage.exit_code == 2);
}

TEST_CASE("verify unrolls a supplied lprime") {
    auto r = run(
        "verify --operator \"E - (n+1)\" --a 1 --b 0 --lprime \"E - n - n*E^(-1)\" "
        "--initial 1 --nmax 12 --format json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["pass"] == true);
    CHECK(j["h_prefix"][0] == "1");
    CHECK(j["h_prefix"][1] == "0");
}

TEST_CASE("gcrd subcommand") {
    auto r = run(
        "gcrd --operator \"(k+1)*E - (k+1)\" --operator \"(3*k+3)*E - (3*k+3)\" --format json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["gcrd"] == "E - 1");
}

TEST_CASE("parse errors exit 2") {
    CHECK(run("reduce --operator \"E -\" --a 1 --b 0").exit_code == 2);
    CHECK(run("reduce --operator \"E^(-1)\" --a 1 --b 0").exit_code == 2);
    CHECK(run("nonsense").exit_code == 2);
    CHECK(run("reduce --a 1 --b 0").exit_code == 2);  // missing --operator
}

TEST_CASE("non-terminating kernel needs a truncation") {
    auto r = run("verify --operator \"E - 1\" --a 1 --b 1/2 --nmax 4");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("truncat") != std::string::npos);
}

}  // TEST_SUITE
