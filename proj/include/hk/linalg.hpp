#ifndef HK_LINALG_HPP
#define HK_LINALG_HPP

#include <optional>

#include "hk/arith.hpp"

namespace hk {

struct IMat {
    size_t rows = 0, cols = 0;
    std::vector<Int> a;

    IMat() = default;
    IMat(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}
    static IMat from_rows(const std::vector<IVec>& rs);
    static IMat from_rows(const std::vector<IVec>& rs, size_t ncols);  // allows empty rs

    Int& at(size_t r, size_t c) { return a[r * cols + c]; }
    const Int& at(size_t r, size_t c) const { return a[r * cols + c]; }
    IVec row(size_t r) const { return IVec(a.begin() + r * cols, a.begin() + (r + 1) * cols); }
    std::vector<IVec> row_list() const;
    IMat transposed() const;
};

struct HermiteResult {
    IMat h;  // row-style Hermite normal form of the input
    IMat u;  // unimodular, u * input == h
    std::vector<size_t> pivot_cols;
};

// Row-style HNF: echelon with positive pivots, entries above each pivot
// reduced into [0, pivot), zero rows last. u tracks the row operations.
HermiteResult hermite_normal_form(const IMat& m);

// Generators span Z^d as a lattice (d pivots, all equal to 1).
bool is_full_lattice(const std::vector<IVec>& gens, size_t dim);

size_t rank(const IMat& m);
Int det(const IMat& m);  // square input

// adj * m == det(m) * I for square m.
IMat adjugate(const IMat& m);

// Unique rational solution of a square nonsingular system; nullopt when
// singular or inconsistent with the extra rows (rows may exceed cols).
std::optional<QVec> solve_unique(const std::vector<IVec>& lhs_rows, const QVec& rhs);

inline std::optional<QVec> solve_unique(const std::vector<IVec>& lhs_rows, const IVec& rhs) {
    return solve_unique(lhs_rows, to_qvec(rhs));
}

// Primitive integer basis of the rational kernel of the given functionals.
std::vector<IVec> kernel_basis(const std::vector<IVec>& functionals, size_t dim);

bool lex_less(const IVec& a, const IVec& b);

}  // namespace hk

#endif
