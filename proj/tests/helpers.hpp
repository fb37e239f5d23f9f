#ifndef HK_TEST_HELPERS_HPP
#define HK_TEST_HELPERS_HPP

#include <initializer_list>

#include "hk/cells.hpp"
#include "hk/ehrhart.hpp"
#include "hk/oracles.hpp"

namespace hkt {

using namespace hk;

inline IVec iv(std::initializer_list<long long> v) {
    IVec r;
    for (long long x : v) r.push_back(Int(x));
    return r;
}

inline QVec qv(std::initializer_list<std::pair<long long, long long>> v) {
    QVec r;
    for (const auto& [n, d] : v) r.push_back(Rat(Int(n), Int(d)));
    return r;
}

inline std::vector<IVec> ivs(std::initializer_list<std::initializer_list<long long>> v) {
    std::vector<IVec> r;
    for (const auto& x : v) r.push_back(iv(x));
    return r;
}

inline AffineSemigroup orthant(size_t d) {
    std::vector<IVec> g;
    for (size_t k = 0; k < d; ++k) {
        IVec e(d, Int(0));
        e[k] = 1;
        g.push_back(e);
    }
    return AffineSemigroup::create(g, d);
}

// Rational normal cone of degree g: generators (1, k), k = 0..g.
inline AffineSemigroup regcone(long long g) {
    std::vector<IVec> gens;
    for (long long k = 0; k <= g; ++k) gens.push_back(iv({1, k}));
    return AffineSemigroup::create(gens, 2);
}

inline AffineSemigroup toric() { return AffineSemigroup::create(ivs({{2, 1}, {1, 1}, {1, 2}}), 2); }

inline AffineSemigroup hirzebruch1() {
    return AffineSemigroup::create(ivs({{1, 0, 0}, {1, 1, 0}, {1, 0, 1}, {1, 1, 1}, {1, 1, 2}}), 3);
}

inline AffineSemigroup hirzebruch2() {
    return AffineSemigroup::create(
        ivs({{1, 0, 0}, {1, 1, 0}, {1, 0, 1}, {1, 1, 1}, {1, 1, 2}, {1, 1, 3}}), 3);
}

inline Polycell max_ideal_cell(const AffineSemigroup& m) {
    return Polycell::create(m, MonomialIdeal::create(m, m.generators()));
}

}  // namespace hkt

#endif
