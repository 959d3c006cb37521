#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "dempoly/cli.hpp"
#include "dempoly/fixtures.hpp"
#include "dempoly/wire.hpp"

using namespace dempoly;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("dispatch exit codes") {
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({"points", "--type", "A", "--rank", "0", "--weight", "1"}).code == 2);
    CHECK(cli({"points", "--type", "Q", "--rank", "2", "--weight", "1,0"}).code == 2);
    CHECK(cli({"points", "--type", "A", "--rank", "2", "--weight", "1"}).code == 2);
    CHECK(cli({"points", "--type", "A", "--rank", "2", "--weight", "1,-1"}).code == 2);
    CHECK(cli({"points", "--type", "A", "--rank", "2", "--weight", "1,0", "--bogus"}).code == 2);
    CHECK(cli({"points", "--type", "D", "--rank", "3", "--weight", "1,0,0"}).code == 2);
    CHECK(cli({"count", "--type", "A", "--rank", "2", "--weight", "1,1"}).code == 0);
    CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("worked example commands") {
    SUBCASE("sp6 inequalities") {
        const Run r = cli({"inequalities", "--type", "C", "--rank", "3", "--start", "1",
                           "--format", "json"});
        REQUIRE(r.code == 0);
        const json j = json::parse(r.out);
        CHECK(j.at("count") == 8);
    }
    SUBCASE("sl4 points") {
        const Run r = cli({"points", "--type", "A", "--rank", "3", "--start", "1", "--weight",
                           "0,1,0", "--format", "json"});
        REQUIRE(r.code == 0);
        const json j = json::parse(r.out);
        CHECK(j.at("count") == 5);
    }
    SUBCASE("B2 dim-check") {
        const Run r = cli({"dim-check", "--type", "B", "--rank", "2", "--weight", "1,0"});
        CHECK(r.code == 0);
        CHECK(r.out.find("5") != std::string::npos);
    }
    SUBCASE("csv points") {
        const Run r = cli({"points", "--type", "C", "--rank", "2", "--weight", "0,1",
                           "--format", "csv"});
        REQUIRE(r.code == 0);
        CHECK(r.out.substr(0, r.out.find('\n')) == "a[1,1],a[1,2],a[1,-1]");
    }
}

TEST_CASE("point set JSON round-trips through membership") {
    const Run r = cli({"points", "--type", "D", "--rank", "4", "--weight", "1,0,0,1",
                       "--format", "json"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    System sys = build_system(LieType{Family::D, 4}, 1);
    const auto pts = parse_point_set_json(j, sys);
    CHECK(pts.size() == j.at("count").get<size_t>());
    const Weight lam = j.at("lambda").get<Weight>();
    for (const auto& s : pts) CHECK(membership(s, sys, lam));
}

TEST_CASE("checks succeed end to end") {
    CHECK(cli({"minkowski", "--type", "C", "--rank", "3", "--weight", "0,1,0", "--weight2",
               "0,0,1"}).code == 0);
    CHECK(cli({"normality", "--type", "B", "--rank", "2", "--weight", "0,1", "--kmax", "3"})
              .code == 0);
    CHECK(cli({"face-check", "--type", "A", "--rank", "3", "--substart", "2", "--weight",
               "0,1,0"}).code == 0);
    CHECK(cli({"ideal-check", "--type", "C", "--rank", "2", "--weight", "0,1"}).code == 0);
    CHECK(cli({"decompose", "--type", "C", "--rank", "2", "--weight", "0,2", "--point",
               "0,2,0"}).code == 0);
    CHECK(cli({"weight-check", "--type", "D", "--rank", "4", "--weight", "0,1,0,0", "--word",
               "full"}).code == 0);
    CHECK(cli({"character", "--type", "B", "--rank", "2", "--weight", "1,0", "--format",
               "json"}).code == 0);
    CHECK(cli({"roots", "--type", "C", "--rank", "2"}).code == 0);
    CHECK(cli({"poset", "--type", "D", "--rank", "4"}).code == 0);
    CHECK(cli({"word", "--type", "D", "--rank", "4", "--word", "full", "--format", "json"})
              .code == 0);
    CHECK(cli({"paths", "--type", "B", "--rank", "3"}).code == 0);
}

TEST_CASE("fixtures command") {
    const Run r = cli({"fixtures"});
    CHECK(r.code == 0);
    CHECK(r.out.find("[PASS] intro-sp6") != std::string::npos);
    CHECK(r.out.find("[PASS] intro-sl4") != std::string::npos);
    CHECK(r.out.find("[PASS] table1-sp8") != std::string::npos);
    CHECK(r.out.find("[PASS] table3-so9") != std::string::npos);
    CHECK(r.out.find("[PASS] table2-C-fund") != std::string::npos);
    CHECK(r.out.find("[PASS] table4-B-fund") != std::string::npos);
    CHECK(r.out.find("flagged") != std::string::npos);
}

TEST_CASE("fixtures are deterministic and independent of the parallelism level") {
    const auto a = fixtures_check();
    const auto b = fixtures_check();
    REQUIRE(a.size() == b.size());
    for (size_t q = 0; q < a.size(); ++q) {
        CHECK(a[q].id == b[q].id);
        CHECK(a[q].pass == b[q].pass);
        CHECK(a[q].detail == b[q].detail);
    }
}

TEST_CASE("sweep command") {
    SUBCASE("empty range") {
        const Run r = cli({"sweep", "--types", ""});
        CHECK(r.code == 0);
        CHECK(r.out == "cell,check,pass,gate,detail\n");
    }
    SUBCASE("small A sweep, jobs-independent output") {
        const Run r1 = cli({"sweep", "--types", "A", "--min-rank", "2", "--max-rank", "3",
                            "--max-summ", "1", "--jobs", "1"});
        const Run r4 = cli({"sweep", "--types", "A", "--min-rank", "2", "--max-rank", "3",
                            "--max-summ", "1", "--jobs", "4"});
        CHECK(r1.code == 0);
        CHECK(r1.out == r4.out);
        CHECK(r1.out.find("FAIL") == std::string::npos);
    }
    SUBCASE("B2 fundamentals") {
        const Run r = cli({"sweep", "--types", "B", "--min-rank", "2", "--max-rank", "2",
                           "--max-summ", "1"});
        CHECK(r.code == 0);
        CHECK(r.out.find("lambda=1,0,dim,pass,hard,5=5") != std::string::npos);
        CHECK(r.out.find("lambda=0,1,dim,pass,hard,3=3") != std::string::npos);
    }
}
