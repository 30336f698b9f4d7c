#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <string>

#include "g2abv/report.hpp"

using namespace g2abv;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(G2ABV_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    const int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

}  // namespace

TEST_CASE("classify") {
    const Run r = run("classify 'q^2' q");
    CHECK(r.code == 0);
    CHECK(r.out.find("case C5, H = GL2(1,0), PHV P2(0)") != std::string::npos);
}

TEST_CASE("coefficients") {
    const Run r = run("coeffs G2:8d");
    CHECK(r.code == 0);
    CHECK(r.out.find("pi(1)'") != std::string::npos);
    CHECK(r.out.find("I0(G2[1])") != std::string::npos);
}

TEST_CASE("verify a suite") {
    const Run r = run("verify fpf");
    CHECK(r.code == 0);
    CHECK(r.out.find("suite fpf: PASS") != std::string::npos);
}

TEST_CASE("errors exit with 2") {
    CHECK(run("classify 'zeta(3)*x' q").code == 2);
    CHECK(run("packet G2:9z").code == 2);
    CHECK(run("nonsense").code == 2);
    const Run j = run("--json packet G2:9z");
    CHECK(j.code == 2);
    const Json e = Json::parse(j.out);
    CHECK(e.at("result").contains("error"));
}

TEST_CASE("json envelope") {
    const Run r = run("--json theta G2:8d '(12)'");
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j.at("schema_version") == kSchemaVersion);
    CHECK(j.at("command").get<std::string>().rfind("theta", 0) == 0);
    CHECK(j.at("status") == 0);
    CHECK(j.contains("warnings"));
}

TEST_CASE("dump round trip") {
    const Run r = run("dump tables");
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j == dump_tables());
    CHECK(tables_to_json(tables_from_json(j)).dump() == j.dump());
}
