#ifndef HK_POLYCELL_HPP
#define HK_POLYCELL_HPP

#include "hk/semigroup.hpp"

namespace hk {

// Semi-open region P = cone(M) \ union_j (d_j + cone(M)) for the exponents
// d_j of a monomial ideal. x lies in n*P iff sigma_i(x) >= 0 for all facet
// forms sigma_i and for every j some i has sigma_i(x) < n * sigma_i(d_j).
class Polycell {
  public:
    // Validates that P is bounded (the ideal is primary to the maximal
    // ideal); otherwise throws "unbounded: ideal not m-primary".
    static Polycell create(AffineSemigroup m, MonomialIdeal ideal);

    const AffineSemigroup& semigroup() const { return m_; }
    const MonomialIdeal& ideal() const { return ideal_; }
    size_t dim() const { return m_.dim(); }
    // sigma values of the ideal exponents: shift_sigma()[j][i] = sigma_i(d_j).
    const std::vector<IVec>& shift_sigma() const { return shift_sigma_; }

    bool member(const IVec& x, const Int& n) const;
    bool member(const QVec& x, const Rat& n) const;

    // #(n*P cap Z^d) by slicewise interval aggregation; int64 fast path with
    // an exact overflow guard, arbitrary precision fallback.
    Int count(const Int& n) const;
    // Same value by testing every box point; for cross-checks.
    Int count_reference(const Int& n) const;

    // Intersections of dim independent active hyperplanes; superset of the
    // vertex set, used for the enclosing box and period bounds.
    const std::vector<QVec>& candidate_vertices() const { return candidates_; }
    // Exact vertices of cl(P), including reflex corners (dim <= 3).
    std::vector<QVec> vertices() const;

    // Rational box containing P.
    const QVec& box_lo() const { return lo_; }
    const QVec& box_hi() const { return hi_; }

    // d! * vol(cone \ conv(union_j d_j + cone)), exact (dim <= 3).
    Rat hilbert_samuel_multiplicity() const;

  private:
    Polycell(AffineSemigroup m, MonomialIdeal ideal)
        : m_(std::move(m)), ideal_(std::move(ideal)) {}
    AffineSemigroup m_;
    MonomialIdeal ideal_;
    std::vector<IVec> shift_sigma_;
    std::vector<QVec> candidates_;
    QVec lo_, hi_;
};

Int hk_value(const Polycell& p, const Int& prime, unsigned e);

Int int_pow(const Int& base, unsigned e);
bool is_prime(const Int& p);

// Exact volume of {x : a.x <= b for each halfspace}, dim <= 3.
struct Halfspace {
    QVec a;
    Rat b;
};
Rat polytope_volume(const std::vector<Halfspace>& hs, size_t dim);

}  // namespace hk

#endif
