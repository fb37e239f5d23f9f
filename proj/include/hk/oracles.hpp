#ifndef HK_ORACLES_HPP
#define HK_ORACLES_HPP

#include "hk/polycell.hpp"

namespace hk {

// f = sum of terms c * x^exp in s variables over F_p.
struct HypersurfacePresentation {
    Int p = 2;
    size_t s = 0;
    std::vector<std::pair<IVec, Int>> terms;

    static HypersurfacePresentation create(const Int& p, size_t s,
                                           std::vector<std::pair<IVec, Int>> terms);
};

// Sparse matrix over F_p; rows hold (column, value) entries with values in
// [0, p), not necessarily sorted or combined.
struct FpMatrix {
    unsigned long long p = 2;
    size_t nrows = 0;
    size_t ncols = 0;
    std::vector<std::vector<std::pair<size_t, unsigned long long>>> rows;
};

// Rank over F_p by sparse Gaussian elimination, pivoting by column order.
size_t fp_rank(FpMatrix m);

// Length of R/I^[q] for q = p^e computed purely by semigroup membership:
// BFS-enumerate M under the standard grading and count the members outside
// every q*d_j + M. Agrees with the geometric count when M is normal.
Int semigroup_bfs_hk(const AffineSemigroup& m, const MonomialIdeal& ideal, const Int& p,
                     unsigned e);

// Length of k[x_1..x_s]/((x_1^q,..,x_s^q) + (f)) for q = p^e, as
// q^s - rank(multiplication by f on the monomial basis of k[x]/(x_i^q)).
Int hk_hypersurface(const HypersurfacePresentation& f, unsigned e);

}  // namespace hk

#endif
