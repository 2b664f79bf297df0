#include "doctest.h"

#include "cli.hpp"
#include "lucaszeta/jsonio.hpp"

#include <sstream>

using namespace lucaszeta;

namespace {

struct RunOutput {
    int code;
    std::string out, err;
};

RunOutput run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("eval-zeta emits the documented report") {
    auto r = run_cli({"eval-zeta", "--P", "1", "--Q", "-1", "--q", "2", "--r", "1", "--s", "2",
                      "--prec", "128"});
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["target"] == "eval-zeta");
    CHECK(j["status"] == "ok");
    double v = std::stod(j["value"]["re"].get<std::string>());
    CHECK(v == doctest::Approx(1.29693).epsilon(1e-4));
    CHECK(j["value"]["prec_bits"] == 128);
    CHECK(j.contains("tail_bound"));
    CHECK(j.contains("terms_used"));
}

TEST_CASE("special subcommand reports exact certificates") {
    auto r = run_cli({"special", "--P", "1", "--Q", "-1", "--q", "2", "--r", "1", "--m", "1"});
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["value"] == "0/1");
    CHECK(j["rational"] == true);
    CHECK(j["galois_ok"] == true);
    CHECK(j["holomorphic"] == true);
}

TEST_CASE("singular special point reports without a value") {
    auto r = run_cli({"special", "--P", "1", "--Q", "-1", "--q", "2", "--r", "1", "--m", "2"});
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["status"] == "singular");
    CHECK(j["singular"] == true);
}

TEST_CASE("determinism: identical invocations give identical bytes") {
    std::vector<std::string> args{"eval-L",  "--P", "1",   "--Q",    "-1", "--chi",
                                  "4:1",     "--s", "2.5", "--prec", "96"};
    auto a = run_cli(args);
    auto b = run_cli(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);

    std::vector<std::string> vargs{"verify", "--suite", "classical", "--seed", "7", "--quick"};
    auto va = run_cli(vargs);
    auto vb = run_cli(vargs);
    CHECK(va.out == vb.out);
}

TEST_CASE("JSON values round-trip at the stated precision") {
    auto r = run_cli({"eval-additive", "--P", "1", "--Q", "-1", "--f", "-1", "--s", "1.25,0.5",
                      "--prec", "128"});
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    Complex z = complex_from_json(j["value"]);
    Json again = complex_to_json(z, 128);
    CHECK(again["re"] == j["value"]["re"]);
    CHECK(again["im"] == j["value"]["im"]);
}

TEST_CASE("rational inputs round-trip") {
    Rational r = parse_rational(rational_str(Rational(-355, 113)));
    CHECK(r == Rational(-355, 113));
}

TEST_CASE("usage errors produce machine-readable diagnostics and exit 1") {
    auto r = run_cli({"eval-zeta", "--P", "1", "--Q", "-1"}); // missing --s
    CHECK(r.code == 1);
    Json diag = Json::parse(r.err);
    CHECK(diag.contains("error"));

    auto bad = run_cli({"eval-zeta", "--P", "1", "--Q", "0", "--s", "2"});
    CHECK(bad.code == 1);
    Json diag2 = Json::parse(bad.err);
    CHECK(diag2["error"]["code"] == "QZero");
}

TEST_CASE("pole proximity is an evaluation error (exit 1)") {
    auto r = run_cli({"eval-zeta", "--P", "1", "--Q", "-1", "--q", "2", "--r", "1", "--s", "0",
                      "--mode", "continuation"});
    CHECK(r.code == 1);
    Json diag = Json::parse(r.err);
    CHECK(diag["error"]["code"] == "PoleProximity");
}

TEST_CASE("csv format emits the documented columns") {
    auto r = run_cli({"eval-zeta", "--P", "1", "--Q", "-1", "--s", "2", "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("target,inputs,value_re,value_im,bound,status", 0) == 0);
    CHECK(r.out.find("eval-zeta") != std::string::npos);
    CHECK(r.out.find(",ok") != std::string::npos);
}

TEST_CASE("characters listing") {
    auto r = run_cli({"characters", "--q", "5"});
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["phi"] == 4);
    CHECK(j["characters"].size() == 4);
    CHECK(j["characters"][0]["principal"] == true);
}

TEST_CASE("poles listing matches the location formula") {
    auto r = run_cli({"poles", "--P", "1", "--Q", "-1", "--variant", "zeta", "--q", "2", "--kmax",
                      "3", "--nmax", "4", "--window", "-5,1,-0.001,0.001"});
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["count"] == 3); // 0, -2, -4
}

TEST_CASE("verify exits 0 on success") {
    auto r = run_cli({"verify", "--suite", "predicate"});
    CHECK(r.code == 0);
    CHECK(r.out.find("[PASS]") != std::string::npos);
}
