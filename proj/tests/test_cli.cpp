#include <sstream>

#include "doctest.h"
#include "specht/cli.hpp"
#include "specht/jsonio.hpp"

using namespace specht;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("shapes listing") {
    auto r = run({"shapes", "-n", "5"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "1,1,1,1,1, f=1\n"
          "2,1,1,1, f=4\n"
          "2,2,1, f=5\n"
          "3,1,1, f=6\n"
          "3,2, f=5\n"
          "4,1, f=4\n"
          "5, f=1\n"
          "sum of squares: 120 = 5!\n");

    auto zero = run({"shapes", "-n", "0"});
    CHECK(zero.out == "∅, f=1\nsum of squares: 1 = 0!\n");

    auto bi = run({"shapes", "-n", "3", "--flavor", "biword"});
    CHECK(bi.out ==
          "|1,1,1, f=1\n"
          "|2,1, f=2\n"
          "|3, f=1\n"
          "1|1,1, f=3\n"
          "1|2, f=3\n"
          "1,1|1, f=3\n"
          "2|1, f=3\n"
          "1,1,1|, f=1\n"
          "2,1|, f=2\n"
          "3|, f=1\n"
          "sum of squares: 48 = 2^3*3!\n");
}

TEST_CASE("specht matrix printing") {
    auto r = run({"specht", "--lambda", "2,1,1"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "      1123  1132  1213  1231  1312  1321  2113  2131  2311  3112  3121  3211\n"
          "1112     .     .     .     +     .     -     .     -     +     .     +     -\n"
          "1121     .     .     -     .     +     .     +     .     -     -     .     +\n"
          "1211     +     -     .     .     .     .     -     +     .     +     -     .\n"
          "2111     -     +     +     -     -     +     .     .     .     .     .     .\n");

    auto h = run({"specht", "--lambda", "3,2", "--heart"});
    CHECK(h.out ==
          "       11122  11212  11221  12112  12121\n"
          "12312      +      .      .      .      -\n"
          "12132      .      -      .      .      .\n"
          "12123      .      .      +      .      .\n"
          "11232      .      .      .      +      .\n"
          "11223      .      .      .      .      -\n");

    CHECK(run({"specht", "--lambda", "1"}).out == "   1\n1  +\n");

    CHECK(run({"specht", "--flavor", "rword", "-r", "2", "--lambda", "1|1"}).out ==
          "      1,w1  w1,1\n"
          "1,w1     +     .\n"
          "w1,1     .     -\n");

    CHECK(run({"specht", "--flavor", "biword", "--lambda", "1|1"}).out ==
          "       1°,1  1°,-1  1,1°  -1,1°\n"
          " 1°,1     .      .     -      +\n"
          "1°,-1     .      .     +      -\n"
          " 1,1°     +      -     .      .\n"
          "-1,1°     -      +     .      .\n");
}

TEST_CASE("rep matrices") {
    CHECK(run({"rep", "--lambda", "3,2", "--element", "(1,2)"}).out ==
          " 1  0  0 -1 -1\n"
          " 0  1  0  1  0\n"
          " 0  0  1  0  1\n"
          " 0  0  0 -1  0\n"
          " 0  0  0  0 -1\n");

    CHECK(run({"rep", "--lambda", "3,2", "--element", "(1,2,3,4,5)"}).out ==
          " 0  1  0  0  0\n"
          " 0  0  1  0  0\n"
          " 1  0 -1 -1 -1\n"
          " 0  0 -1  0 -1\n"
          " 0  1  1  1  1\n");

    CHECK(run({"rep", "--flavor", "rword", "-r", "3", "--lambda", "|3,2|", "--element",
               "t1"}).out ==
          "w 0 0 0 0\n"
          "0 w 0 0 0\n"
          "0 0 w 0 0\n"
          "0 0 0 w 0\n"
          "0 0 0 0 w\n");

    CHECK(run({"rep", "--flavor", "biword", "--lambda", "|3,2", "--element", "t1"}).out ==
          "-1  0  0  0  0\n"
          " 0 -1  0  0  0\n"
          " 0  0 -1  0  0\n"
          " 0  0  0 -1  0\n"
          " 0  0  0  0 -1\n");

    CHECK(run({"rep", "--flavor", "biword", "--lambda", "|3,2", "--element",
               "t1 (1,2,3,4,5)"}).out ==
          " 0 -1  0  0  0\n"
          " 0  0 -1  0  0\n"
          "-1  0  1  1  1\n"
          " 0  0  1  0  1\n"
          " 0 -1 -1 -1 -1\n");
}

TEST_CASE("chartable") {
    auto r = run({"chartable", "-n", "2"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "        1,1   2\n"
          "(size)    1   1\n"
          "   1,1    1  -1\n"
          "     2    1   1\n");

    auto j = run({"chartable", "-n", "2", "--format", "json"});
    auto parsed = json::parse(j.out);
    CHECK(parsed.at("shapes") == json::array({"1,1", "2"}));
    CHECK(parsed.at("values") == json::parse("[[1,-1],[1,1]]"));
}

TEST_CASE("verify command") {
    auto r = run({"verify", "-n", "4", "--suite", "all"});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(r.out.find("PASS (7 suites, 0 failures)\n") != std::string::npos);

    auto c = run({"verify", "-n", "3", "-r", "2", "--flavor", "rword", "--suite", "cross-r2"});
    CHECK(c.code == 0);
    CHECK(c.out == "[PASS] cross-r2: character tables at n=3\nPASS (1 suites, 0 failures)\n");

    auto j = run({"verify", "-n", "2", "--suite", "dimension", "--format", "json"});
    CHECK(json::parse(j.out).at("failures") == 0);
}

TEST_CASE("json round trips") {
    auto w = run({"words", "--lambda", "2,1", "--format", "json"});
    auto parsed = json::parse(w.out);
    CHECK(parsed.at("orbit_size") == 3);
    for (const auto& s : parsed.at("orbit"))
        CHECK(to_string(parse_word(WordSystem::plain, 1, s.get<std::string>())) == s);
    CHECK(parse_partition(parsed.at("lambda").get<std::string>()) == Partition({2, 1}));

    auto m = run({"rep", "--flavor", "rword", "-r", "3", "--lambda", "1|1|1", "--element",
                  "t2 (1,3)", "--format", "json"});
    auto pm = json::parse(m.out);
    auto g = element_from_json(pm.at("element"));
    CHECK(g == parse_element("t2 (1,3)", 3, 3));
    for (const auto& row : pm.at("matrix"))
        for (const auto& v : row) CHECK(to_json(cyclo_from_json(v, 3)) == v);

    auto s = run({"specht", "--lambda", "2,1", "--format", "json"});
    auto ps = json::parse(s.out);
    CHECK(ps.at("rows").size() == 3);
    CHECK(ps.at("cols").size() == 3);
    CHECK(ps.at("entries").size() == 3);
}

TEST_CASE("byte stability") {
    auto a = run({"verify", "-n", "3", "--suite", "homomorphism", "--seed", "9"});
    auto b = run({"verify", "-n", "3", "--suite", "homomorphism", "--seed", "9"});
    CHECK(a.out == b.out);
    auto c = run({"chartable", "-n", "3", "--flavor", "biword"});
    auto d = run({"chartable", "-n", "3", "--flavor", "biword"});
    CHECK(c.out == d.out);
}

TEST_CASE("failures burn an exit code and a report") {
    auto bad = run({"rep", "--lambda", "3,oops", "--element", "()"});
    CHECK(bad.code == 1);
    CHECK(json::parse(bad.err).contains("error"));

    auto mismatch = run({"rep", "--lambda", "3,2", "-n", "4", "--element", "()"});
    CHECK(mismatch.code == 1);

    auto capped = run({"words", "--lambda", "1,1,1,1,1,1,1,1", "--cap-orbit", "10"});
    CHECK(capped.code == 1);
    CHECK(json::parse(capped.err).at("error").get<std::string>().find("40320") !=
          std::string::npos);

    auto plain_r = run({"shapes", "-n", "2", "-r", "3"});
    CHECK(plain_r.code == 1);
}
