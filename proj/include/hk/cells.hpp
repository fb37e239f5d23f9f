#ifndef HK_CELLS_HPP
#define HK_CELLS_HPP

#include "hk/polycell.hpp"

namespace hk {

// Full-dimensional open cell of the integer-threshold arrangement
// {x : sigma_i(x) in Z}: the open cell is {x : c-1 < sigma(x) < c} and its
// upper closure {x : c-1 < sigma(x) <= c}, both named by the label c.
// witness is a rational point of the open cell, so every sigma_i(witness)
// is strictly non-integral.
struct ArrangementCell {
    IVec label;
    QVec witness;
};

// Cells whose labels differ by an element of sigma(Z^d); the representative
// carries the lexicographically smallest label. mu is the minimal generator
// count of the attached conic module, filled by min_generators (0 until
// then).
struct ConicClass {
    ArrangementCell representative;
    std::vector<ArrangementCell> members;
    Int mu = 0;
};

// The open cells contained in P = cone \ union_j (d_j + cone), sorted by
// label; they tile P up to measure zero. Requires the ideal to cut the same
// region as the maximal monomial ideal.
std::vector<ArrangementCell> cells_in_polycell(const Polycell& pc);

// Partition by label difference in sigma(Z^d); classes ordered by
// representative label, members in label order.
std::vector<ConicClass> classify_cells(const std::vector<ArrangementCell>& cells,
                                       const SupportHyperplanes& h);

// #(n * upper_closure(cell) cap Z^d); class-invariant in the cell.
Int nu(const SupportHyperplanes& h, const ArrangementCell& cell, const Int& n);

// Number of minimal elements of S = {s in Z^d : sigma(s) >= label} under
// s' <= s iff s - s' in M; this is the minimal generator count of the conic
// module attached to the cell's class. Requires M normal, so that
// divisibility equals the componentwise sigma order.
Int min_generators(const AffineSemigroup& m, const ArrangementCell& cell);

// Volume of the (closure of the) cell with the given label.
Rat cell_volume(const SupportHyperplanes& h, const IVec& label, size_t dim);

// Sum of the cell volumes; the cells tile P, so this is vol(P) exactly.
Rat volume_via_cells(const Polycell& pc);

// Cells of P for I = m, classified, with mu filled; caches the polycell so
// repeated evaluations share the setup.
struct CellDecomposition {
    Polycell pc;
    std::vector<ArrangementCell> cells;
    std::vector<ConicClass> classes;

    static CellDecomposition create(const AffineSemigroup& m);

    // Sum over classes of mu * nu(representative, n); agrees with pc.count(n).
    Int value(const Int& n) const;
    Rat volume() const;
};

// The lattice-point count of (p^e) * P recomputed through the class
// decomposition instead of direct counting.
Int hk_via_cells(const AffineSemigroup& m, const Int& p, unsigned e);

}  // namespace hk

#endif
