#include <doctest.h>

#include "helpers.hpp"
#include "hk/lp.hpp"

using namespace hkt;
using namespace hk::lp;

namespace {

Problem box2() {
    Problem p;
    p.nvars = 2;
    p.add(qv({{1, 1}, {0, 1}}), Rel::LE, Rat(3));
    p.add(qv({{0, 1}, {1, 1}}), Rel::LE, Rat(2));
    p.add(qv({{1, 1}, {0, 1}}), Rel::GE, Rat(-1));
    p.add(qv({{0, 1}, {1, 1}}), Rel::GE, Rat(0));
    return p;
}

}  // namespace

TEST_CASE("maximize over a box") {
    auto r = maximize(box2(), qv({{1, 1}, {2, 1}}));
    REQUIRE(r.status == Status::Optimal);
    CHECK(r.value == Rat(7));
    CHECK(r.x == qv({{3, 1}, {2, 1}}));
}

TEST_CASE("free variables and equality rows") {
    Problem p;
    p.nvars = 2;
    p.add(qv({{1, 1}, {1, 1}}), Rel::EQ, Rat(1));
    p.add(qv({{1, 1}, {-1, 1}}), Rel::LE, Rat(5));
    auto r = maximize(p, qv({{1, 1}, {0, 1}}));
    REQUIRE(r.status == Status::Optimal);
    CHECK(r.value == Rat(3));
    CHECK(r.x[0] + r.x[1] == Rat(1));
}

TEST_CASE("infeasible and unbounded statuses") {
    Problem p;
    p.nvars = 1;
    p.add(qv({{1, 1}}), Rel::GE, Rat(2));
    p.add(qv({{1, 1}}), Rel::LE, Rat(1));
    CHECK(maximize(p, qv({{1, 1}})).status == Status::Infeasible);
    CHECK_FALSE(feasible_point(p));

    Problem u;
    u.nvars = 1;
    u.add(qv({{1, 1}}), Rel::GE, Rat(0));
    CHECK(maximize(u, qv({{1, 1}})).status == Status::Unbounded);
}

TEST_CASE("feasible point satisfies every row") {
    auto pt = feasible_point(box2());
    REQUIRE(pt);
    for (const Row& row : box2().rows) {
        Rat v = dotqq(row.a, *pt);
        if (row.rel == Rel::LE) CHECK(v <= row.b);
        if (row.rel == Rel::GE) CHECK(v >= row.b);
        if (row.rel == Rel::EQ) CHECK(v == row.b);
    }
}

TEST_CASE("fractional optimum is exact") {
    Problem p;
    p.nvars = 2;
    p.add(qv({{2, 1}, {1, 1}}), Rel::LE, Rat(1));
    p.add(qv({{1, 1}, {3, 1}}), Rel::LE, Rat(1));
    p.add(qv({{1, 1}, {0, 1}}), Rel::GE, Rat(0));
    p.add(qv({{0, 1}, {1, 1}}), Rel::GE, Rat(0));
    auto r = maximize(p, qv({{1, 1}, {1, 1}}));
    REQUIRE(r.status == Status::Optimal);
    CHECK(r.value == Rat(3, 5));
    CHECK(r.x == qv({{2, 5}, {1, 5}}));
}
