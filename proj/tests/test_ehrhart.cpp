#include <doctest.h>

#include "helpers.hpp"

using namespace hkt;

namespace {

std::vector<std::pair<Int, Int>> sample_counts(const Polycell& pc, long long n_max) {
    std::vector<std::pair<Int, Int>> s;
    for (long long n = 1; n <= n_max; ++n) s.emplace_back(n, pc.count(n));
    return s;
}

}  // namespace

TEST_CASE("unit box fit: n^2 with period 1") {
    auto qp = ehrhart_quasipolynomial(max_ideal_cell(orthant(2)));
    CHECK(qp.degree == 2);
    CHECK(qp.period == 1);
    CHECK(qp.tables[0] == qv({{0, 1}, {0, 1}, {1, 1}}));
    CHECK(qp.evaluate(5) == Rat(25));
    CHECK(qp.latex() == "n^2");
}

TEST_CASE("degree-2 rational normal cone fit: period 2") {
    auto qp = ehrhart_quasipolynomial(max_ideal_cell(regcone(2)));
    CHECK(qp.degree == 2);
    CHECK(qp.period == 2);
    CHECK(qp.tables[0] == qv({{0, 1}, {0, 1}, {3, 2}}));
    CHECK(qp.tables[1] == qv({{-1, 2}, {0, 1}, {3, 2}}));
    CHECK(qp.evaluate(9) == Rat(121));
    CHECK(qp.latex() ==
          "\\begin{cases}\n"
          "  \\frac{3}{2} n^2 & n \\equiv 0 \\pmod{2} \\\\\n"
          "  \\frac{3}{2} n^2 - \\frac{1}{2} & n \\equiv 1 \\pmod{2}\n"
          "\\end{cases}");
}

TEST_CASE("non-simplicial example fit: period 3 with collapsed case rows") {
    auto qp = ehrhart_quasipolynomial(max_ideal_cell(toric()));
    CHECK(qp.period == 3);
    CHECK(qp.tables[0] == qv({{0, 1}, {0, 1}, {5, 3}}));
    CHECK(qp.tables[1] == qv({{-2, 3}, {0, 1}, {5, 3}}));
    CHECK(qp.tables[2] == qp.tables[1]);
    CHECK(qp.evaluate(6) == Rat(60));
    CHECK(qp.evaluate(1) == Rat(1));
    CHECK(qp.evaluate(2) == Rat(6));
    CHECK(qp.latex() ==
          "\\begin{cases}\n"
          "  \\frac{5}{3} n^2 & n \\equiv 0 \\pmod{3} \\\\\n"
          "  \\frac{5}{3} n^2 - \\frac{2}{3} & n \\equiv 1, 2 \\pmod{3}\n"
          "\\end{cases}");
}

TEST_CASE("fits reproduce held-out counts") {
    for (const auto& m : {orthant(2), regcone(2), regcone(3), toric()}) {
        auto pc = max_ideal_cell(m);
        auto qp = ehrhart_quasipolynomial(pc);
        long long top = (qp.period * Int(pc.dim() + 2)).convert_to<long long>();
        for (long long n = top + 1; n <= top + 3; ++n) CHECK(qp.evaluate(n) == Rat(pc.count(n)));
    }
}

TEST_CASE("evaluate rejects arguments below the validity threshold") {
    auto qp = ehrhart_quasipolynomial(max_ideal_cell(orthant(2)));
    CHECK_THROWS_AS(qp.evaluate(0), ValidationError);
    CHECK_THROWS_AS(qp.evaluate(-3), ValidationError);
}

TEST_CASE("interpolation flags corrupted samples") {
    auto pc = max_ideal_cell(regcone(2));
    auto samples = sample_counts(pc, 8);
    samples[5].second += 1;
    CHECK_THROWS_WITH_AS(interpolate(samples, 2, 2), "inconsistent samples", ValidationError);
}

TEST_CASE("interpolation demands enough samples per residue class") {
    auto pc = max_ideal_cell(regcone(2));
    CHECK_THROWS_AS(interpolate(sample_counts(pc, 6), 2, 2), ValidationError);
}

TEST_CASE("leading and second coefficients") {
    CHECK(hk_coefficients(ehrhart_quasipolynomial(max_ideal_cell(regcone(2)))) ==
          std::pair<Rat, Rat>{Rat(3, 2), Rat(0)});
    CHECK(hk_coefficients(ehrhart_quasipolynomial(max_ideal_cell(toric()))) ==
          std::pair<Rat, Rat>{Rat(5, 3), Rat(0)});
    CHECK(hk_coefficients(ehrhart_quasipolynomial(max_ideal_cell(hirzebruch1()))) ==
          std::pair<Rat, Rat>{Rat(7, 4), Rat(-1, 8)});
}

TEST_CASE("non-constant leading coefficient is rejected") {
    // f(n) = n^2 for even n, 2 n^2 for odd n
    std::vector<std::pair<Int, Int>> samples;
    for (long long n = 1; n <= 8; ++n)
        samples.emplace_back(n, n % 2 == 0 ? Int(n) * n : 2 * Int(n) * n);
    auto qp = interpolate(samples, 2, 2);
    CHECK_THROWS_WITH_AS(hk_coefficients(qp), "leading coefficient not constant", ValidationError);
}

TEST_CASE("non-constant second coefficient is rejected") {
    // f(n) = n^2 + n for even n, n^2 for odd n
    std::vector<std::pair<Int, Int>> samples;
    for (long long n = 1; n <= 8; ++n)
        samples.emplace_back(n, n % 2 == 0 ? Int(n) * n + n : Int(n) * n);
    auto qp = interpolate(samples, 2, 2);
    CHECK_THROWS_WITH_AS(hk_coefficients(qp), "second coefficient not constant", ValidationError);
}

TEST_CASE("restriction to prime powers: odd prime on the degree-2 cone") {
    auto form = hk_form(max_ideal_cell(regcone(2)), 3, 3);
    CHECK(form.alpha == Rat(3, 2));
    CHECK(form.beta == Rat(0));
    CHECK(form.preperiod == 0);
    CHECK(form.e_period == 1);
    CHECK(form.branches[0] == qv({{-1, 2}, {0, 1}, {3, 2}}));
    CHECK(form.value(1) == Rat(13));
    CHECK(form.value(2) == Rat(121));
}

TEST_CASE("restriction to prime powers: alternating residues") {
    // degree-3 cone at p=2: 2^e mod 3 alternates 1, 2, 1, ...
    auto form = hk_form(max_ideal_cell(regcone(3)), 2, 3);
    CHECK(form.alpha == Rat(2));
    CHECK(form.preperiod == 0);
    CHECK(form.e_period == 2);
    CHECK(form.row(0) == qv({{-1, 1}, {0, 1}, {2, 1}}));  // e even: 2q^2 - 1
    CHECK(form.row(1) == qv({{0, 1}, {0, 1}, {2, 1}}));   // e odd: 2q^2
    CHECK(form.value(2) == Rat(31));
}

TEST_CASE("restriction to prime powers: preperiod when p divides the period") {
    // S_1 has period 2; at p=2 only e = 0 gives an odd q
    auto form = hk_form(max_ideal_cell(hirzebruch1()), 2, 3);
    CHECK(form.preperiod == 1);
    CHECK(form.e_period == 1);
    CHECK(form.value(0) == Rat(1));
    CHECK(form.branches[0] == qv({{0, 1}, {-1, 4}, {-1, 8}, {7, 4}}));
    CHECK(form.alpha == Rat(7, 4));
    CHECK(form.beta == Rat(-1, 8));
}

TEST_CASE("first orthant form is q^d for any prime") {
    for (long long p : {2, 3, 5}) {
        auto form = hk_form(max_ideal_cell(orthant(3)), p, 2);
        CHECK(form.alpha == Rat(1));
        CHECK(form.beta == Rat(0));
        CHECK(form.e_period == 1);
        CHECK(form.branches[0] == qv({{0, 1}, {0, 1}, {0, 1}, {1, 1}}));
    }
}
