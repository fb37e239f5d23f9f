#include <doctest.h>

#include <set>

#include "helpers.hpp"

using namespace hkt;

namespace {

Int regcone_count(long long g, const Int& q) {
    // (g+1)/2 q^2 + (-v^2 + v g - g + 1)/2 with v = (q-1) mod g
    Int v = (q - 1) % g;
    return ((g + 1) * q * q - v * v + v * g - g + 1) / 2;
}

}  // namespace

TEST_CASE("membership in dilated polycells") {
    auto pc = max_ideal_cell(regcone(2));
    CHECK(pc.member(iv({2, 1}), 2));
    CHECK_FALSE(pc.member(iv({2, 2}), 2));
    CHECK(pc.member(iv({0, 0}), 1));
    CHECK_FALSE(pc.member(iv({1, 0}), 1));

    auto orth = max_ideal_cell(orthant(2));
    CHECK_FALSE(orth.member(iv({1, 0}), 1));
    CHECK(orth.member(iv({0, 0}), 1));
    CHECK(orth.member(iv({1, 1}), 2));
}

TEST_CASE("counts match the closed forms") {
    auto orth = max_ideal_cell(orthant(2));
    for (long long n = 1; n <= 6; ++n) CHECK(orth.count(n) == Int(n) * n);

    for (long long g = 2; g <= 4; ++g) {
        auto pc = max_ideal_cell(regcone(g));
        for (long long n = 1; n <= 9; ++n) CHECK(pc.count(n) == regcone_count(g, n));
    }
    CHECK(max_ideal_cell(regcone(2)).count(9) == 121);
}

TEST_CASE("interval-aggregation counts equal brute-force counts") {
    for (const auto& m : {orthant(2), regcone(2), regcone(3), toric()}) {
        auto pc = max_ideal_cell(m);
        for (long long n = 1; n <= 8; ++n) CHECK(pc.count(n) == pc.count_reference(n));
    }
    auto h1 = max_ideal_cell(hirzebruch1());
    for (long long n = 1; n <= 4; ++n) CHECK(h1.count(n) == h1.count_reference(n));
}

TEST_CASE("counting the rational shrink agrees with integer dilation") {
    // #(P cap (1/n)Z^d) = #(nP cap Z^d), each side computed independently
    for (const auto& m : {regcone(2), toric()}) {
        auto pc = max_ideal_cell(m);
        for (long long n = 1; n <= 5; ++n) {
            Int grid = 0;
            IVec x(2);
            Int xlo = rat_floor(pc.box_lo()[0] * n), xhi = rat_ceil(pc.box_hi()[0] * n);
            Int ylo = rat_floor(pc.box_lo()[1] * n), yhi = rat_ceil(pc.box_hi()[1] * n);
            for (Int a = xlo; a <= xhi; ++a)
                for (Int b = ylo; b <= yhi; ++b) {
                    QVec q{Rat(a, Int(n)), Rat(b, Int(n))};
                    if (pc.member(q, Rat(1))) ++grid;
                }
            CHECK(grid == pc.count(n));
        }
    }
}

TEST_CASE("count rejects nonpositive dilation") {
    CHECK_THROWS_WITH_AS(max_ideal_cell(orthant(2)).count(0), "dilation factor must be positive",
                         ValidationError);
}

TEST_CASE("non-primary ideals are rejected") {
    auto m = orthant(2);
    CHECK_THROWS_WITH_AS(Polycell::create(m, MonomialIdeal::create(m, ivs({{1, 0}}))),
                         "unbounded: ideal not m-primary", ValidationError);
}

TEST_CASE("vertices of the unit box polycell") {
    auto verts = max_ideal_cell(orthant(2)).vertices();
    std::set<QVec> got(verts.begin(), verts.end());
    std::set<QVec> want{qv({{0, 1}, {0, 1}}), qv({{1, 1}, {0, 1}}), qv({{0, 1}, {1, 1}}),
                        qv({{1, 1}, {1, 1}})};
    CHECK(got == want);
}

TEST_CASE("vertices of the degree-2 rational normal cone polycell") {
    auto verts = max_ideal_cell(regcone(2)).vertices();
    std::set<QVec> got(verts.begin(), verts.end());
    std::set<QVec> want{qv({{0, 1}, {0, 1}}), qv({{1, 1}, {0, 1}}), qv({{1, 1}, {1, 1}}),
                        qv({{1, 1}, {2, 1}}), qv({{3, 2}, {1, 1}}), qv({{3, 2}, {2, 1}})};
    CHECK(got == want);
}

TEST_CASE("vertex denominators of the non-simplicial example divide 3") {
    for (const QVec& v : max_ideal_cell(toric()).vertices())
        for (const Rat& c : v) CHECK(Int(3) % den(c) == 0);
}

TEST_CASE("one-dimensional polycells") {
    auto m = AffineSemigroup::create(ivs({{1}}), 1);
    auto pc = max_ideal_cell(m);
    CHECK(pc.count(5) == 5);
    auto verts = pc.vertices();
    REQUIRE(verts.size() == 2);
    CHECK(verts[0] == qv({{0, 1}}));
    CHECK(verts[1] == qv({{1, 1}}));
}

TEST_CASE("polytope volume in dimensions 1 to 3") {
    // [1/2, 2]
    std::vector<Halfspace> seg{{qv({{1, 1}}), Rat(2)}, {qv({{-1, 1}}), Rat(-1, 2)}};
    CHECK(polytope_volume(seg, 1) == Rat(3, 2));

    std::vector<Halfspace> square{{qv({{1, 1}, {0, 1}}), Rat(1)},
                                  {qv({{-1, 1}, {0, 1}}), Rat(0)},
                                  {qv({{0, 1}, {1, 1}}), Rat(1)},
                                  {qv({{0, 1}, {-1, 1}}), Rat(0)}};
    CHECK(polytope_volume(square, 2) == Rat(1));

    std::vector<Halfspace> tri{{qv({{-1, 1}, {0, 1}}), Rat(0)},
                               {qv({{0, 1}, {-1, 1}}), Rat(0)},
                               {qv({{1, 1}, {1, 1}}), Rat(1)}};
    CHECK(polytope_volume(tri, 2) == Rat(1, 2));

    std::vector<Halfspace> tet{{qv({{-1, 1}, {0, 1}, {0, 1}}), Rat(0)},
                               {qv({{0, 1}, {-1, 1}, {0, 1}}), Rat(0)},
                               {qv({{0, 1}, {0, 1}, {-1, 1}}), Rat(0)},
                               {qv({{1, 1}, {1, 1}, {1, 1}}), Rat(1)}};
    CHECK(polytope_volume(tet, 3) == Rat(1, 6));

    std::vector<Halfspace> cube;
    for (size_t k = 0; k < 3; ++k) {
        QVec a(3, Rat(0)), b(3, Rat(0));
        a[k] = 1;
        b[k] = -1;
        cube.push_back({a, Rat(2)});
        cube.push_back({b, Rat(0)});
    }
    CHECK(polytope_volume(cube, 3) == Rat(8));

    // empty and lower-dimensional inputs have volume 0
    std::vector<Halfspace> empty{{qv({{1, 1}, {0, 1}}), Rat(0)}, {qv({{-1, 1}, {0, 1}}), Rat(-1)}};
    CHECK(polytope_volume(empty, 2) == Rat(0));
}

TEST_CASE("hilbert-samuel multiplicities") {
    CHECK(max_ideal_cell(orthant(2)).hilbert_samuel_multiplicity() == Rat(1));
    CHECK(max_ideal_cell(orthant(3)).hilbert_samuel_multiplicity() == Rat(1));
    for (long long g = 2; g <= 4; ++g)
        CHECK(max_ideal_cell(regcone(g)).hilbert_samuel_multiplicity() == Rat(g));
    CHECK(max_ideal_cell(toric()).hilbert_samuel_multiplicity() == Rat(2));
}

TEST_CASE("hk_value is the count at q = p^e") {
    auto orth = max_ideal_cell(orthant(2));
    CHECK(hk_value(orth, 2, 3) == 64);
    CHECK(hk_value(orth, 3, 0) == 1);
    CHECK_THROWS_WITH_AS(hk_value(orth, 4, 1), "p must be prime", ValidationError);
    auto pc = max_ideal_cell(regcone(2));
    CHECK(hk_value(pc, 3, 1) == 13);
    CHECK(hk_value(pc, 2, 1) == 6);
}

TEST_CASE("growth stays within a linear band around the leading term") {
    // |count(n) - (3/2) n^2| <= C n with C frozen from n <= 15, checked to 30
    auto pc = max_ideal_cell(regcone(2));
    Rat c(0);
    for (long long n = 1; n <= 15; ++n) {
        Rat err = Rat(pc.count(n)) - Rat(3 * n * n, 2);
        if (err < 0) err = -err;
        err /= n;
        if (err > c) c = err;
    }
    for (long long n = 16; n <= 30; ++n) {
        Rat err = Rat(pc.count(n)) - Rat(3 * n * n, 2);
        if (err < 0) err = -err;
        CHECK(err <= c * n);
    }
}
