#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ratgenus/atlas.hpp"
#include "ratgenus/cli.hpp"

using namespace ratgenus;
using nlohmann::json;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("dinv emits the exact d-table") {
    RunResult r = run({"dinv", "2", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"p\":2,\"q\":1,\"d\":[\"1/4\",\"-1/4\"]}\n");
}

TEST_CASE("dinv normalizes q") {
    RunResult r = run({"dinv", "5", "7"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["p"] == 5);
    CHECK(j["q"] == 2);
    CHECK(j["d"] == json::array({"2/5", "2/5", "-2/5", "0/1", "-2/5"}));
}

TEST_CASE("theta command") {
    RunResult r = run({"theta", "5", "1", "2"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["theta_lb"] == "1/5");
    CHECK(j["raw_bound"] == "1/5");
    CHECK(j["maximizers"] == json::array({3}));
    CHECK(j["exact"] == false);
    CHECK(!j.contains("chi"));
}

TEST_CASE("simple command") {
    RunResult r = run({"simple", "5", "1", "2"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["exact"] == true);
    CHECK(j["chi"] == -1);
    CHECK(j["rational_norm"] == "1/10");
    CHECK(j["theta_lb"] == "1/5");
    CHECK(j["fibered"] == true);
    CHECK(!j.contains("degenerate"));

    RunResult zero = run({"simple", "2", "1", "0"});
    CHECK(zero.code == 0);
    json jz = json::parse(zero.out);
    CHECK(jz["degenerate"] == true);
    CHECK(jz["chi"] == 1);
    CHECK(jz["theta_lb"] == "0/1");
    CHECK(!jz.contains("fibered"));
}

TEST_CASE("surgery command with a torus knot") {
    RunResult r = run({"surgery", "--knot", "T(2,3)", "--p", "2"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["genus"] == 1);
    CHECK(j["V"] == json::array({1, 0}));
    CHECK(j["d"] == json::array({"-7/4", "-1/4"}));
    CHECK(j["dual_theta_bound"] == "1/2");
    CHECK(j["is_genus_minimizer"] == true);

    RunResult small = run({"surgery", "--knot", "T(2,3)", "--p", "1"});
    CHECK(small.code == 0);
    CHECK(json::parse(small.out)["is_genus_minimizer"] == false);
}

TEST_CASE("surgery command with explicit coefficients") {
    RunResult r = run({"surgery", "--alex", "1,-1,1", "--p", "2"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["dual_theta_bound"] == "1/2");
    CHECK(j["is_genus_minimizer"] == true);
}

TEST_CASE("surgery rejects non-L-space patterns with a domain error") {
    RunResult r = run({"surgery", "--alex", "1,1,-3,1,1", "--p", "5"});
    CHECK(r.code == 1);
    CHECK(r.err.find("L-space") != std::string::npos);
}

TEST_CASE("atlas json structure and counts") {
    RunResult r = run({"atlas", "--pmax", "3"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["schema"] == "ratgenus-atlas-v1");
    REQUIRE(j["records"].size() == 8);  // (2,1) x2 + (3,1) x3 + (3,2) x3
    CHECK(j["records"][0]["p"] == 2);
    CHECK(j["records"][0]["k"] == 0);
    CHECK(j["records"][0]["exact"] == true);
    CHECK(j["records"][0]["chi"] == 1);
    CHECK(j["records"][0]["theta_lb"] == "0/1");
    CHECK(!j["records"][0].contains("fibered"));  // zero class
    CHECK(j["records"][7]["p"] == 3);
    CHECK(j["records"][7]["q"] == 2);
    CHECK(j["records"][7]["k"] == 2);
}

TEST_CASE("atlas csv pins the documented row format") {
    RunResult r = run({"atlas", "--pmax", "2", "--format", "csv"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string header, row0, row1;
    std::getline(lines, header);
    std::getline(lines, row0);
    std::getline(lines, row1);
    CHECK(header == "p,q,k,order,theta_lb,raw_bound,exact,chi,rational_norm,fibered,maximizers");
    CHECK(row0 == "2,1,0,1,0/1,-1/1,true,1,0/1,,0;1");
    CHECK(row1 == "2,1,1,2,0/1,-1/2,true,1,0/1,true,1");
}

TEST_CASE("atlas output is identical across worker counts and paths") {
    RunResult serial = run({"atlas", "--pmax", "12", "--jobs", "1"});
    RunResult parallel = run({"atlas", "--pmax", "12", "--jobs", "3"});
    CHECK(serial.code == 0);
    CHECK(parallel.code == 0);
    CHECK(serial.out == parallel.out);
    CHECK(serial.out == emit_records(generate_atlas(12, 2), AtlasFormat::json));

    RunResult csv1 = run({"atlas", "--pmax", "12", "--jobs", "1", "--format", "csv"});
    RunResult csv3 = run({"atlas", "--pmax", "12", "--jobs", "3", "--format", "csv"});
    CHECK(csv1.out == csv3.out);
    CHECK(csv1.out == emit_records(generate_atlas(12, 1), AtlasFormat::csv));
}

TEST_CASE("atlas round trip") {
    std::vector<AtlasRecord> records = generate_atlas(10, 2);
    CHECK(parse_records(emit_records(records, AtlasFormat::json), AtlasFormat::json) == records);
    CHECK(parse_records(emit_records(records, AtlasFormat::csv), AtlasFormat::csv) == records);
}

TEST_CASE("atlas --out writes the same bytes to a file") {
    const char* path = "atlas_cli_test_tmp.json";
    RunResult direct = run({"atlas", "--pmax", "6"});
    RunResult filed = run({"atlas", "--pmax", "6", "--out", path});
    CHECK(filed.code == 0);
    CHECK(filed.out.empty());
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == direct.out);
    in.close();
    std::remove(path);
}

TEST_CASE("every emitted rational matches the schema regex") {
    // ^-?[0-9]+/[1-9][0-9]*$ spelled out by hand
    auto is_schema_rational = [](std::string_view s) {
        size_t i = s.empty() ? 0 : (s[0] == '-' ? 1 : 0);
        size_t slash = s.find('/');
        if (slash == std::string_view::npos || slash == i || slash + 1 >= s.size()) return false;
        for (size_t j = i; j < slash; ++j)
            if (s[j] < '0' || s[j] > '9') return false;
        if (s[slash + 1] < '1' || s[slash + 1] > '9') return false;
        for (size_t j = slash + 2; j < s.size(); ++j)
            if (s[j] < '0' || s[j] > '9') return false;
        return true;
    };
    for (const AtlasRecord& rec : generate_atlas(8, 1)) {
        CHECK(is_schema_rational(rec.theta_lb.to_string()));
        CHECK(is_schema_rational(rec.raw_bound.to_string()));
        REQUIRE(rec.rational_norm.has_value());
        CHECK(is_schema_rational(rec.rational_norm->to_string()));
    }
}

TEST_CASE("the 3-sphere degenerates gracefully") {
    RunResult d = run({"dinv", "1", "0"});
    CHECK(d.code == 0);
    CHECK(d.out == "{\"p\":1,\"q\":0,\"d\":[\"0/1\"]}\n");
    RunResult s = run({"simple", "1", "0", "0"});
    CHECK(s.code == 0);
    json j = json::parse(s.out);
    CHECK(j["degenerate"] == true);
    CHECK(j["chi"] == 1);
}

TEST_CASE("verify command") {
    RunResult r = run({"verify", "--pmax", "25"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["schema"] == "ratgenus-verify-v1");
    CHECK(j["ok"] == true);
    REQUIRE(j["checks"].size() == 5);
    for (const auto& c : j["checks"]) CHECK(c["failures"].empty());
}

TEST_CASE("error exit codes") {
    CHECK(run({"dinv", "4", "2"}).code == 1);          // non-coprime
    CHECK(run({"dinv", "0", "1"}).code == 1);          // invalid order
    CHECK(run({"dinv", "x", "1"}).code == 64);         // unparseable integer
    CHECK(run({"dinv", "2"}).code == 64);              // missing argument
    CHECK(run({"frobnicate"}).code == 64);             // unknown command
    CHECK(run({}).code == 64);                         // no command
    CHECK(run({"help"}).code == 0);
    CHECK(run({"atlas", "--format", "json"}).code == 64);             // missing --pmax
    CHECK(run({"atlas", "--pmax", "4", "--format", "xml"}).code == 64);
    CHECK(run({"atlas", "--pmax", "4", "--bogus", "1"}).code == 64);
    CHECK(run({"surgery", "--p", "3"}).code == 64);    // neither --knot nor --alex
    CHECK(run({"surgery", "--knot", "T(2,3)", "--alex", "1", "--p", "3"}).code == 64);
    CHECK(run({"surgery", "--knot", "T[2,3]", "--p", "3"}).code == 64);
    CHECK(run({"surgery", "--knot", "T(4,6)", "--p", "3"}).code == 1);  // non-coprime torus knot
    CHECK(run({"verify"}).code == 64);                 // missing --pmax
    RunResult usage = run({"dinv", "4", "2"});
    CHECK(usage.err.find("coprime") != std::string::npos);
}
