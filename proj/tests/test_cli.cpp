#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cli.hpp"

#include "desing/parse.hpp"

#include <sstream>

using namespace desing;
using desing::cli::json;

namespace {

const char* const kEx1 = "(z-1)*z*E^2-(3*z+7)*(z-3)*E+(z+2)*(z+1)";
const char* const kEx2 = "(z-3)*(z-2)*E + z*(z-1)";
const char* const kIntegrality = "(1+16*z)^2*E^2-(224+512*z)*E-(z+1)*(17+16*z)^2";

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

ShiftOp canonical(const std::string& text) { return normalize(parse_shift(text)); }

} // namespace

TEST_CASE("tdesing prints the order-4 desingularization") {
    auto r = run({"tdesing", kEx2});
    REQUIRE(r.code == 0);
    ShiftOp expected = canonical("(5*z^5-46*z^4+163*z^3-278*z^2+228*z-72)*E^4"
                                 "+(5*z^5+14*z^4-59*z^3-188*z^2+96*z+648)*E+72");
    CHECK(canonical(r.out) == expected);
}

TEST_CASE("apparent reports -1 as not apparent") {
    auto r = run({"apparent", "--sigma", "-1", kEx1});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("not apparent\n", 0) == 0);

    auto j = run({"apparent", "--json", "--sigma", "-1", kEx1});
    REQUIRE(j.code == 0);
    json doc = json::parse(j.out);
    CHECK(doc["apparent"] == false);
    CHECK(doc["q"] == "4");
    CHECK(doc["relations"]["columns"] == json::parse("[[0,0],[1,0]]"));
    CHECK(doc["relations"]["rows"] == json::parse(R"([["20","-39"]])"));

    auto ex2 = run({"apparent", "--sigma", "0", kEx2});
    CHECK(ex2.out.rfind("apparent\n", 0) == 0);
}

TEST_CASE("extend continues the integrality example") {
    auto r = run({"extend", "--dir", "right", "--init", "1,0", "--count", "2", kIntegrality});
    REQUIRE(r.code == 0);
    CHECK(r.out == "u(2) = 289\nu(3) = 736\n");

    auto j = run({"extend", "--json", "--init", "0,1", "--count", "2", kIntegrality});
    json doc = json::parse(j.out);
    CHECK(doc["values"][0]["value"] == "224");
    CHECK(doc["values"][1]["value"] == "578");
    CHECK(doc["blocked_at"].is_null());
}

TEST_CASE("extend stops at a singularity and suggests the desingularization") {
    auto r = run({"extend", "--dir", "left", "--base", "3", "--init", "1", "--count", "5", kEx2});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("blocked") != std::string::npos);
    CHECK(r.out.find("--desing") != std::string::npos);
}

TEST_CASE("other subcommands") {
    auto s = run({"singularities", kEx2});
    CHECK(s.code == 0);
    CHECK(s.out.find("apparent") != std::string::npos);

    auto c = run({"complete", "--side", "lt", "(z-2)*E-z"});
    CHECK(c.code == 0);
    CHECK(c.out.find("yes") != std::string::npos);

    auto d = run({"rdivide", "E^3-3*E^2+3*E-1", "(z-2)*E-z"});
    CHECK(d.code == 0);
    CHECK(d.out.find("remainder: 0\n") != std::string::npos);

    auto diff = run({"ddesing", "D^2 - (2/z)*D + 1 + 2/z^2"});
    CHECK(diff.code == 0);
    CHECK(parse_diff(diff.out.substr(0, diff.out.find('\n'))) == parse_diff("D^3 - z*D^2 + 3*D - z"));

    auto exps = run({"apparent", "--ring", "diff", "--sigma", "0", "D^2 - (2/z)*D + 1 + 2/z^2"});
    CHECK(exps.out.find("{1, 2}") != std::string::npos);
}

TEST_CASE("operators from stdin and as JSON") {
    auto r = run({"tdesing", "-"}, kEx2);
    CHECK(r.code == 0);
    CHECK(r.out == run({"tdesing", kEx2}).out);

    auto j = run({"tdesing", "--json", kEx2});
    json doc = json::parse(j.out);
    ShiftOp out = cli::shift_from_json(doc["output"]);
    CHECK(out == canonical(doc["text"].get<std::string>()));

    auto again = run({"tdesing", doc["output"].dump()});
    CHECK(canonical(again.out) == out);
}

TEST_CASE("JSON round trip is lossless") {
    ShiftOp s = parse_shift("(3/7*z^2 - 1/2)*E^2 + (z/(z+1))*E - 5/3");
    CHECK(cli::shift_from_json(json::parse(cli::to_json(s).dump())) == s);
    DiffOp d = parse_diff("D^2 - (2/z)*D + 1 + 2/z^2");
    json jd = cli::to_json(d);
    CHECK(jd["ring"] == "diff");
    CHECK(cli::diff_from_json(jd) == d);
    CHECK(cli::to_json(parse_shift("z*E+1"))["coeffs"] == json::parse(R"([["1"],["0","1"]])"));
}

TEST_CASE("exit codes") {
    CHECK(run({"tdesing", "(z+1*E"}).code == 2);
    CHECK(run({"apparent", "--sigma", "x", kEx1}).code == 2);
    CHECK(run({"nosuchcommand"}).code == 2);
    CHECK(run({"tdesing", "{\"coeffs\": 3"}).code == 2);
    CHECK(run({"apparent", "--sigma", "5", kEx1}).code == 3);
    CHECK(run({"tdesing", "0"}).code == 3);
    CHECK(run({"complete", "--side", "x", kEx1}).code == 3);
    auto alg = run({"ddesing", "D - 1/(z^2-2)"});
    CHECK(alg.code == 4);
    CHECK(alg.err.find('\n') == alg.err.size() - 1);
}

TEST_CASE("selftest passes") {
    auto r = run({"selftest"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
}
