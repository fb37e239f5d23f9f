#include <doctest.h>

#include <cstdlib>
#include <set>

#include "helpers.hpp"
#include "hk/report.hpp"

using namespace hkt;

namespace {

ProblemSpec spec_of(const std::string& toml) { return parse_spec_text(toml, "test", false); }

}  // namespace

TEST_CASE("json_int switches to strings past 2^53") {
    CHECK(json_int(Int(0)) == 0);
    CHECK(json_int(Int(-7)) == -7);
    Int just_below = (Int(1) << 53) - 1;
    CHECK(json_int(just_below).is_number_integer());
    CHECK(json_int(Int(1) << 53).is_string());
    CHECK(json_int(Int(1) << 53) == "9007199254740992");
    CHECK(json_int(-(Int(1) << 60)) == "-1152921504606846976");
}

TEST_CASE("json_rat round-trips through parse_rat") {
    for (const Rat& r : {Rat(3, 2), Rat(-11, 4), Rat(0), Rat(5), Rat(Int("123456789123456789"), 7)}) {
        Json j = json_rat(r);
        REQUIRE(j.is_string());
        CHECK(parse_rat(j.get<std::string>()) == r);
    }
    CHECK(json_rat(Rat(3, 2)) == "3/2");
    CHECK(json_rat(Rat(4)) == "4");
}

TEST_CASE("sha256 matches the reference vector") {
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("quasipolynomial serializes to degree/period/tables") {
    QuasiPolynomial qp = ehrhart_quasipolynomial(max_ideal_cell(regcone(2)));
    Json j = qp_to_json(qp);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"degree", "period", "tables"});
    CHECK(j["degree"] == 2);
    CHECK(j["period"] == 2);
    REQUIRE(j["tables"].size() == 2);
    CHECK(j["tables"][0] == Json::array({"0", "0", "3/2"}));
    CHECK(j["tables"][1] == Json::array({"-1/2", "0", "3/2"}));
}

TEST_CASE("hk form serializes the residue cycle") {
    HKFunctionForm f = hk_form(max_ideal_cell(regcone(3)), 2, 3);
    Json j = hk_form_to_json(f);
    CHECK(j["prime"] == 2);
    CHECK(j["alpha"] == "2");
    CHECK(j["beta"] == "0");
    // 2^e mod 3 alternates 1, 2: two branches with residues 1 and 2
    CHECK(j["e_period"] == 2);
    REQUIRE(j["residue_cycle"].size() == 2);
    CHECK(j["residue_cycle"][0]["residue"] == 1);
    CHECK(j["residue_cycle"][1]["residue"] == 2);
    for (const Json& row : j["residue_cycle"]) CHECK(row["coefficients"].size() == 3);
}

TEST_CASE("count task reproduces the orthant example") {
    Json report = run_tasks(spec_of("generators = [[1,0],[0,1]], prime = 2, e_max = 3"));
    CHECK(report["tool"] == tool_version());
    CHECK(report["input_sha256"].get<std::string>().size() == 64);
    const Json& counts = report["results"]["count"]["per_prime"][0]["counts"];
    CHECK(counts == Json::array({4, 16, 64}));
    CHECK(report["timing_ms"].contains("count"));
}

TEST_CASE("bg task reports classes and the consistency flag") {
    Json report = run_tasks(spec_of(
        "generators = [[1,0],[1,1],[1,2]], prime = 2, e_max = 3, tasks = [\"count\", \"bg\"]"));
    const Json& bg = report["results"]["bg"];
    CHECK(bg["consistent"] == true);
    CHECK(bg["class_count"] == 2);
    REQUIRE(bg["classes"].size() == 2);
    std::multiset<long long> mus;
    for (const Json& cls : bg["classes"]) {
        mus.insert(cls["mu"].get<long long>());
        CHECK(cls.contains("label"));
        CHECK(cls.contains("multiplicity_in_P"));
        CHECK(cls.contains("nu_samples"));
    }
    CHECK(mus == std::multiset<long long>{1, 2});
}

TEST_CASE("interpolate task fits, holds out, and specializes per prime") {
    Json report = run_tasks(spec_of(
        "generators = [[1,0],[1,1],[1,2]], primes = [2, 3], e_max = 3, tasks = "
        "[\"interpolate\"]"));
    const Json& it = report["results"]["interpolate"];
    CHECK(it["quasipolynomial"]["degree"] == 2);
    CHECK(it["holdout"]["match"] == true);
    CHECK(it["holdout"]["dilations"].size() == 3);
    CHECK(it["latex"].get<std::string>().find("n^2") != std::string::npos);
    REQUIRE(it["hk_forms"].size() == 2);
    CHECK(it["hk_forms"][0]["prime"] == 2);
    CHECK(it["hk_forms"][1]["prime"] == 3);
    CHECK(it["hk_forms"][0]["alpha"] == "3/2");
}

TEST_CASE("multiplicity tasks report alpha, beta, volume, and the classical number") {
    Json report = run_tasks(spec_of(
        "generators = [[2,1],[1,1],[1,2]], prime = 2, e_max = 2, tasks = "
        "[\"multiplicity\", \"hs-multiplicity\"]"));
    const Json& mult = report["results"]["multiplicity"];
    CHECK(mult["alpha"] == "5/3");
    CHECK(mult["beta"] == "0");
    CHECK(mult["volume_via_cells"] == "5/3");
    CHECK(mult["alpha_equals_volume"] == true);
    CHECK(report["results"]["hs-multiplicity"]["multiplicity"] == "2");
}

TEST_CASE("oracle task cross-checks the independent counter") {
    Json report = run_tasks(spec_of(
        "generators = [[1,0],[1,1],[1,2]], primes = [2, 3], e_max = 2, tasks = [\"oracle\"]"));
    const Json& oracle = report["results"]["oracle"];
    CHECK(oracle["consistent"] == true);
    CHECK(oracle["per_prime"][0]["lengths"] == Json::array({6, 24}));
    CHECK(oracle["per_prime"][1]["lengths"] == Json::array({13, 121}));
}

TEST_CASE("hypersurface specs run the finite-field oracle") {
    Json report = run_tasks(spec_of(
        "kind = \"hypersurface\", p = 7, vars = 2, e_max = 2\n"
        "f = [{exp = [0, 4], c = 1}, {exp = [3, 1], c = -1}]\n"
        "tasks = [\"oracle\"]\n"));
    CHECK(report["results"]["oracle"]["prime"] == 7);
    CHECK(report["results"]["oracle"]["lengths"] == Json::array({25, 193}));
}

TEST_CASE("reports are deterministic apart from timing") {
    ProblemSpec sp = spec_of(
        "generators = [[1,0],[1,1],[1,2]], prime = 2, e_max = 2, tasks = [\"count\", \"bg\"]");
    Json a = run_tasks(sp);
    Json b = run_tasks(sp);
    a.erase("timing_ms");
    b.erase("timing_ms");
    CHECK(a.dump() == b.dump());
    CHECK(a["input_sha256"] == spec_content_hash(sp));
}

TEST_CASE("oversized scans trip the budget guard") {
    ProblemSpec sp = spec_of("generators = [[1,0],[0,1]], prime = 3, e_max = 40");
    CHECK_THROWS_AS(run_tasks(sp), InfeasibleError);
}

TEST_CASE("table rendering flattens scalars to path = value lines") {
    Json report = run_tasks(spec_of("generators = [[1,0],[0,1]], prime = 2, e_max = 3"));
    std::string table = report_table(report);
    CHECK(table.find("tool = " + tool_version() + "\n") != std::string::npos);
    CHECK(table.find("results.count.per_prime[0].prime = 2\n") != std::string::npos);
    CHECK(table.find("results.count.per_prime[0].counts[2] = 64\n") != std::string::npos);
}

TEST_CASE("cache directory resolution prefers the override") {
    // no asserts on machine paths; only the override behavior is pinned
    std::string saved = std::getenv("HK_CACHE_DIR") ? std::getenv("HK_CACHE_DIR") : "";
    setenv("HK_CACHE_DIR", "/tmp/hk-test-cache", 1);
    CHECK(default_cache_dir() == "/tmp/hk-test-cache");
    if (saved.empty())
        unsetenv("HK_CACHE_DIR");
    else
        setenv("HK_CACHE_DIR", saved.c_str(), 1);
}
