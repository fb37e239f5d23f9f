#ifndef HK_LP_HPP
#define HK_LP_HPP

#include <optional>

#include "hk/arith.hpp"

namespace hk {

// Small dense exact-rational linear programs over free variables.
namespace lp {

enum class Rel { LE, GE, EQ };

struct Row {
    QVec a;
    Rel rel;
    Rat b;
};

struct Problem {
    size_t nvars = 0;
    std::vector<Row> rows;

    void add(const QVec& a, Rel rel, const Rat& b) { rows.push_back({a, rel, b}); }
    void add_int(const IVec& a, Rel rel, const Rat& b) { rows.push_back({to_qvec(a), rel, b}); }
};

enum class Status { Infeasible, Unbounded, Optimal };

struct Result {
    Status status;
    Rat value;  // objective at optimum
    QVec x;
};

// Maximize objective . x subject to the rows; Bland's rule, exact arithmetic.
Result maximize(const Problem& p, const QVec& objective);

// Feasibility witness, if any.
std::optional<QVec> feasible_point(const Problem& p);

}  // namespace lp

}  // namespace hk

#endif
