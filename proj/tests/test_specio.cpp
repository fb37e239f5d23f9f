#include <doctest.h>

#include "helpers.hpp"
#include "hk/spec_io.hpp"

using namespace hkt;

TEST_CASE("toml subset: pairs, comments, nested arrays") {
    Json j = parse_toml_subset(
        "# header comment\n"
        "kind = \"semigroup\"  # trailing comment\n"
        "generators = [\n"
        "  [1, 0],\n"
        "  [1, 1],  # middle\n"
        "  [1, 2],\n"
        "]\n"
        "prime = 3\n"
        "flag = true\n",
        "t");
    CHECK(j["kind"] == "semigroup");
    CHECK(j["generators"].size() == 3);
    CHECK(j["generators"][2][1] == 2);
    CHECK(j["prime"] == 3);
    CHECK(j["flag"] == true);
}

TEST_CASE("toml subset: comma-separated pairs on one line") {
    Json j = parse_toml_subset("generators = [[1,0],[1,1],[1,2]], prime = 3, e_max = 3", "t");
    CHECK(j["generators"].size() == 3);
    CHECK(j["prime"] == 3);
    CHECK(j["e_max"] == 3);
}

TEST_CASE("toml subset: inline tables and negative integers") {
    Json j = parse_toml_subset("f = [{exp = [0, 4], c = 1}, {exp = [3, 1], c = -1}]", "t");
    CHECK(j["f"].size() == 2);
    CHECK(j["f"][1]["c"] == -1);
    CHECK(j["f"][0]["exp"][1] == 4);
}

TEST_CASE("toml subset: wide integers survive as strings") {
    Json j = parse_toml_subset("x = 123456789012345678901234567890", "t");
    CHECK(j["x"].is_string());
    CHECK(j["x"] == "123456789012345678901234567890");
}

TEST_CASE("toml subset: diagnostics carry file and line") {
    CHECK_THROWS_WITH_AS(parse_toml_subset("a = 1\nb = \n", "spec.toml"),
                         "spec.toml:2: expected a value", ValidationError);
    CHECK_THROWS_WITH_AS(parse_toml_subset("a = 1\na = 2\n", "s"), "s:2: duplicate key 'a'",
                         ValidationError);
    CHECK_THROWS_WITH_AS(parse_toml_subset("x = 1.5\n", "s"),
                         "s:1: floating point values are not accepted; use exact integers",
                         ValidationError);
    CHECK_THROWS_WITH_AS(parse_toml_subset("x = [1, 2\ny = 3", "s"),
                         "s:2: expected ',' or ']' in array", ValidationError);
    CHECK_THROWS_WITH_AS(parse_toml_subset("[table]\n", "s"),
                         "s:1: table headers are not accepted; use key = value pairs",
                         ValidationError);
}

TEST_CASE("spec: defaults and inference") {
    ProblemSpec sp = parse_spec_text("generators = [[1,0],[1,1],[1,2]], prime = 3, e_max = 3",
                                     "t", false);
    CHECK(sp.kind == "semigroup");
    CHECK(sp.dimension == 2);
    CHECK(sp.generators.size() == 3);
    CHECK(sp.ideal_exps.empty());
    CHECK(sp.primes == std::vector<Int>{3});
    CHECK(sp.e_max == 3);
    CHECK(sp.tasks == std::vector<std::string>{"count"});

    ProblemSpec defaulted = parse_spec_text("generators = [[1,0],[0,1]]\ne_max = 2\n", "t", false);
    CHECK(defaulted.primes == std::vector<Int>{2});
}

TEST_CASE("spec: json form parses to the same problem") {
    std::string toml = "generators = [[1,0],[1,1],[1,2]], prime = 3, e_max = 3";
    std::string json = R"({"kind": "semigroup", "generators": [[1,0],[1,1],[1,2]],
                           "primes": [3], "e_max": 3, "tasks": ["count"]})";
    ProblemSpec a = parse_spec_text(toml, "a", false);
    ProblemSpec b = parse_spec_text(json, "b", true);
    CHECK(a.canonical() == b.canonical());
    CHECK(a.canonical().dump() == b.canonical().dump());
}

TEST_CASE("spec: canonical echo normalizes the ideal and key order") {
    ProblemSpec sp = parse_spec_text("generators = [[1,0],[0,1]], prime = 2, e_max = 1", "t",
                                     false);
    Json c = sp.canonical();
    std::vector<std::string> keys;
    for (auto it = c.begin(); it != c.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"kind", "dimension", "generators", "ideal", "primes",
                                           "e_max", "tasks"});
    CHECK(c["ideal"] == c["generators"]);
}

TEST_CASE("spec: json parse errors carry position") {
    try {
        parse_spec_text("{\"kind\": }", "bad.json", true);
        CHECK(false);
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("bad.json") == 0);
        CHECK(std::string(e.what()).find("parse error") != std::string::npos);
    }
}

TEST_CASE("spec: field validation") {
    CHECK_THROWS_WITH_AS(parse_spec_text("e_max = 2", "t", false),
                         "spec field 'generators': required", ValidationError);
    CHECK_THROWS_WITH_AS(parse_spec_text("generators = [[1,0],[0,1]]", "t", false),
                         "spec field 'e_max': required", ValidationError);
    CHECK_THROWS_WITH_AS(
        parse_spec_text("generators = [[1,0],[0,1]], e_max = 0", "t", false),
        "spec field 'e_max': must be between 1 and 40", ValidationError);
    CHECK_THROWS_WITH_AS(
        parse_spec_text("generators = [[1,0],[0,1]], e_max = 1, prime = 4", "t", false),
        "spec field 'primes': 4 is not prime", ValidationError);
    CHECK_THROWS_WITH_AS(
        parse_spec_text("generators = [[1,0],[0,1]], e_max = 1, bogus = 1", "t", false),
        "unknown spec field 'bogus'", ValidationError);
    CHECK_THROWS_WITH_AS(
        parse_spec_text("generators = [[1,0],[0,1]], e_max = 1, prime = 2, primes = [2]", "t",
                        false),
        "spec field 'prime': give either 'prime' or 'primes', not both", ValidationError);
    CHECK_THROWS_WITH_AS(
        parse_spec_text("generators = [[1,0],[0,1,2]], e_max = 1", "t", false),
        "spec field 'generators': vector arity differs from the dimension", ValidationError);
    CHECK_THROWS_WITH_AS(
        parse_spec_text("generators = [[1,0],[0,1]], e_max = 1, tasks = [\"count\", \"count\"]",
                        "t", false),
        "spec field 'tasks': duplicate task 'count'", ValidationError);
    CHECK_THROWS_WITH_AS(
        parse_spec_text("generators = [[1,0],[0,1]], e_max = 1, tasks = [\"fit\"]", "t", false),
        "spec field 'tasks': unknown task 'fit' for kind \"semigroup\"", ValidationError);
    CHECK_THROWS_WITH_AS(
        parse_spec_text("generators = [[1,0],[0,1]], e_max = 1, p = 3", "t", false),
        "spec field 'p': only valid for kind \"hypersurface\"", ValidationError);
}

TEST_CASE("spec: hypersurface kind") {
    ProblemSpec sp = parse_spec_text(
        "kind = \"hypersurface\", p = 7, vars = 2, e_max = 2\n"
        "f = [{exp = [0, 4], c = 1}, {exp = [3, 1], c = -1}]\n"
        "tasks = [\"oracle\"]\n",
        "t", false);
    CHECK(sp.hs_p == 7);
    CHECK(sp.hs_vars == 2);
    CHECK(sp.hs_terms.size() == 2);
    CHECK(sp.hs_terms[1].second == -1);
    CHECK(sp.primes == std::vector<Int>{7});
    HypersurfacePresentation f = sp.hypersurface();
    CHECK(f.terms.size() == 2);

    CHECK_THROWS_WITH_AS(
        parse_spec_text("kind = \"hypersurface\", p = 7, vars = 2, e_max = 1, tasks = [\"bg\"]\n"
                        "f = [{exp = [0, 4], c = 1}]\n",
                        "t", false),
        "spec field 'tasks': unknown task 'bg' for kind \"hypersurface\"", ValidationError);
    CHECK_THROWS_WITH_AS(
        parse_spec_text("kind = \"hypersurface\", p = 6, vars = 2, e_max = 1\n"
                        "f = [{exp = [0, 4], c = 1}]\n",
                        "t", false),
        "spec field 'p': 6 is not prime", ValidationError);
    CHECK_THROWS_WITH_AS(
        parse_spec_text("kind = \"hypersurface\", p = 5, vars = 2, e_max = 1\n"
                        "f = [{exp = [0, 4], c = 1, extra = 2}]\n",
                        "t", false),
        "spec field 'f': unknown term field 'extra'", ValidationError);
}

TEST_CASE("spec: semigroup and ideal construction round-trip") {
    ProblemSpec sp = parse_spec_text(
        "generators = [[1,0],[1,1],[1,2]], e_max = 2, ideal = [[1,0],[1,2]]", "t", false);
    AffineSemigroup m = sp.semigroup();
    CHECK(m.dim() == 2);
    MonomialIdeal ideal = sp.ideal(m);
    CHECK(ideal.exps.size() == 2);

    // the default ideal is the full generator list
    ProblemSpec sp2 = parse_spec_text("generators = [[1,0],[1,1],[1,2]], e_max = 2", "t", false);
    CHECK(sp2.ideal(sp2.semigroup()).exps.size() == 3);

    // non-pointed generators surface the library's message
    ProblemSpec bad = parse_spec_text("generators = [[1,0],[-1,0],[0,1]], e_max = 1", "t", false);
    CHECK_THROWS_WITH_AS(bad.semigroup(), "not pointed: cone(M) contains a line",
                         ValidationError);
}
