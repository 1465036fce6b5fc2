#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

// End-to-end tests against the installed binary. The JSON documents below
// are goldens: byte-for-byte output contracts, key order included.

namespace {

using nlohmann::json;

struct CliResult {
    int code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const char* bin = std::getenv("TNORM_CLI_BIN");
    REQUIRE(bin != nullptr);
    std::string cmd = env_prefix + "\"" + bin + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult r;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, n);
    int status = pclose(pipe);
    REQUIRE(status != -1);
    r.code = WEXITSTATUS(status);
    return r;
}

json parse(const CliResult& r) { return json::parse(r.out); }

} // namespace

TEST_CASE("ball golden document") {
    const std::string golden = R"({
  "fraction": "7/16",
  "cf": [
    2,
    3,
    2
  ],
  "vertex_norms": {
    "l1": 1,
    "l2": 1,
    "l1+l2": 2,
    "l1-l2": 2
  },
  "rays": [
    "0",
    "inf"
  ],
  "faces": 4,
  "shape": "quadrilateral-axes",
  "base_type": false,
  "fibers_S10": false
}
)";

    CliResult r = run_cli("ball 7/16");
    CHECK(r.code == 0);
    CHECK(r.out == golden);

    CliResult via_cf = run_cli("ball --cf 2,3,2");
    CHECK(via_cf.code == 0);
    CHECK(via_cf.out == golden);
}

TEST_CASE("ball variants") {
    SECTION("mirror") {
        CliResult r = run_cli("ball 7/16 --mirror");
        REQUIRE(r.code == 0);
        json j = parse(r);
        CHECK(j["fraction"] == "9/16");
        CHECK(j["cf"] == json::array({-2, -3, -2}));
        CHECK(j["rays"] == json::array({"0", "inf"}));
    }
    SECTION("norm-zero link") {
        CliResult r = run_cli("ball 1/2");
        REQUIRE(r.code == 0);
        json j = parse(r);
        CHECK(j["shape"] == "plane");
        CHECK(j["faces"] == 0);
        CHECK(j["rays"] == json::array());
        CHECK(j["base_type"] == true);
        CHECK(j["fibers_S10"] == true);
    }
    SECTION("strip") {
        CliResult r = run_cli("ball 1/4");
        REQUIRE(r.code == 0);
        json j = parse(r);
        CHECK(j["shape"] == "strip");
        CHECK(j["faces"] == 2);
        CHECK(j["rays"] == json::array({"1"}));
    }
    SECTION("svg side output") {
        const std::string path = "/tmp/tnorm_cli_test_ball.svg";
        std::remove(path.c_str());
        CliResult r = run_cli("ball 1/4 --svg " + path);
        REQUIRE(r.code == 0);
        std::ifstream in(path);
        REQUIRE(in.good());
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        CHECK(text.find("<svg") != std::string::npos);
        std::remove(path.c_str());
    }
}

TEST_CASE("eval golden") {
    CliResult r = run_cli("eval 7/16 --class 2,1");
    CHECK(r.code == 0);
    CHECK(r.out == "\"3\"\n");

    CliResult frac = run_cli("eval 7/16 --class 1/2,1/3");
    CHECK(frac.code == 0);
    CHECK(frac.out == "\"5/6\"\n");
}

TEST_CASE("farey-path output") {
    CliResult r = run_cli("farey-path 7/16");
    REQUIRE(r.code == 0);
    json j = parse(r);
    CHECK(j["fraction"] == "7/16");
    CHECK(j["path"] == json::array({"inf", "1/2", "7/16"}));
    CHECK(j["length"] == 2);
    CHECK(j["x10"] == 1);

    SECTION("bounded tree misses deep fractions") {
        CliResult miss = run_cli("farey-path 7/16 --max-den 4");
        CHECK(miss.code == 2);
        CHECK(parse(miss)["kind"] == "domain");
    }
    SECTION("bounded tree finds shallow fractions") {
        CliResult hit = run_cli("farey-path 7/16 --max-den 16");
        REQUIRE(hit.code == 0);
        CHECK(parse(hit)["length"] == 2);
    }
}

TEST_CASE("satellite command") {
    SECTION("fraction specs trace their own linking numbers") {
        CliResult r = run_cli("satellite --companion 5/14 --pattern 5/14");
        REQUIRE(r.code == 0);
        json j = parse(r);
        CHECK(j["lk_companion"] == 1);
        CHECK(j["lk_pattern"] == 1);
        CHECK(j["lk"] == 1);
        CHECK(j["vertex_norms"]["l1"] == 4);
        CHECK(j["vertex_norms"]["l1+l2"] == 8);
        CHECK(j["rays"] == json::array({"-1", "0", "inf"}));
        CHECK(j["faces"] == 6);
    }
    SECTION("JSON specs with explicit linking numbers") {
        const std::string spec =
            "'{\"vertex_norms\": {\"l1\": 1, \"l2\": 1, \"l1+l2\": 2, \"l1-l2\": 2}}'";
        CliResult r = run_cli("satellite --companion " + spec + " --pattern " + spec +
                              " --lk-companion 2 --lk-pattern 2");
        REQUIRE(r.code == 0);
        json j = parse(r);
        CHECK(j["lk"] == 4);
        CHECK(j["vertex_norms"]["l1"] == 3);
        CHECK(j["rays"] == json::array({"0", "inf"}));
        CHECK(j["faces"] == 4);
    }
    SECTION("JSON specs require their linking number flags") {
        const std::string spec =
            "'{\"vertex_norms\": {\"l1\": 1, \"l2\": 1, \"l1+l2\": 2, \"l1-l2\": 2}}'";
        CliResult r = run_cli("satellite --companion " + spec + " --pattern 5/14");
        CHECK(r.code == 1);
        CHECK(parse(r)["kind"] == "usage");
    }
}

TEST_CASE("family command") {
    CliResult r = run_cli("family --faces 8");
    REQUIRE(r.code == 0);
    json j = parse(r);
    CHECK(j["faces"] == 8);
    REQUIRE(j["chain"].size() == 2);
    CHECK(j["chain"][0]["lk"] == 3);
    CHECK(j["chain"][1]["lk"] == 9);
    CHECK(j["ball"]["rays"] == json::array({"0", "1/3", "3", "inf"}));
    CHECK(j["ball"]["shape"] == "octagon");
    CHECK(j["provenance"].get<std::string>().rfind("tower of 1", 0) == 0);

    SECTION("odd and oversized face counts are rejected") {
        CHECK(run_cli("family --faces 7").code == 2);
        CHECK(run_cli("family --faces 514").code == 2);
    }
}

TEST_CASE("sweep command") {
    CliResult r = run_cli("sweep 16", "TNORM_SWEEP_THREADS=3 ");
    REQUIRE(r.code == 0);
    json j = parse(r);
    CHECK(j["max_q"] == 16);
    REQUIRE(j["links"].is_number_integer());
    CHECK(j["links"] == 31);
    CHECK(j["failures"] == json::array());
    CHECK(j["summary"] == "checked 31 links, 0 failures");

    SECTION("thread count validation") {
        CHECK(run_cli("sweep 16", "TNORM_SWEEP_THREADS=0 ").code == 2);
    }
    SECTION("bound validation") {
        CHECK(run_cli("sweep 2001").code == 2);
    }
}

TEST_CASE("error reporting") {
    SECTION("domain errors exit 2") {
        CliResult r = run_cli("ball 3/7");
        CHECK(r.code == 2);
        json j = parse(r);
        CHECK(j["kind"] == "domain");
        CHECK(j.contains("error"));
    }
    SECTION("usage errors exit 1") {
        CHECK(run_cli("ball abc").code == 1);
        CHECK(run_cli("ball").code == 1);
        CHECK(run_cli("ball 7/16 --cf 2,3,2").code == 1);
        CHECK(run_cli("eval 7/16 --class 1,0,0").code == 1);
        CHECK(run_cli("nonsense").code == 1);
    }
    SECTION("help exits 0") {
        CHECK(run_cli("--help").code == 0);
    }
}
