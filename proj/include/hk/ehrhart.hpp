#ifndef HK_EHRHART_HPP
#define HK_EHRHART_HPP

#include <string>
#include <utility>

#include "hk/polycell.hpp"

namespace hk {

// Counting function n -> tables[n mod period] evaluated at n, valid for
// n >= n_min. tables[k][j] is the coefficient of n^j.
struct QuasiPolynomial {
    size_t degree = 0;
    Int period = 1;
    Int n_min = 1;
    std::vector<QVec> tables;

    Rat evaluate(const Int& n) const;
    std::string latex(const std::string& var = "n") const;
};

// Exact fit from (n, count) samples: per residue class mod period_bound a
// degree-d polynomial is solved from d+1 samples and checked on the rest
// (throws "inconsistent samples" on any mismatch), then the period is
// minimized over divisors of period_bound. Requires at least degree+2
// samples in every residue class.
QuasiPolynomial interpolate(const std::vector<std::pair<Int, Int>>& samples, size_t degree,
                            const Int& period_bound);

// Interpolates n -> #(n*P cap Z^d) from counts at n = 1..r0*(d+2), where r0
// is the lcm of the coordinate denominators of the vertices of cl(P).
QuasiPolynomial ehrhart_quasipolynomial(const Polycell& pc);

// (leading coefficient, next coefficient); each must be shared by every
// residue table.
std::pair<Rat, Rat> hk_coefficients(const QuasiPolynomial& qp);

// The counting quasipolynomial restricted to arguments q = p^e. The residue
// of p^e mod period is eventually periodic in e: rows for e < preperiod sit
// in prefix, later ones cycle through branches with index
// (e - preperiod) mod e_period. Coefficients are in q = p^e.
struct HKFunctionForm {
    Int prime = 2;
    size_t degree = 0;
    Rat alpha;
    Rat beta;
    Int qp_period = 1;
    unsigned preperiod = 0;
    unsigned e_period = 1;
    std::vector<QVec> prefix;
    std::vector<QVec> branches;

    const QVec& row(unsigned e) const;
    Rat value(unsigned e) const;
};

// Builds the Ehrhart quasipolynomial of P, restricts to q = p^e, and checks
// the result against directly computed counts for every e <= e_max.
HKFunctionForm hk_form(const Polycell& pc, const Int& p, unsigned e_max);

}  // namespace hk

#endif
