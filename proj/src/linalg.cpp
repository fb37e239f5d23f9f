#include "hk/linalg.hpp"

#include <algorithm>

namespace hk {

IMat IMat::from_rows(const std::vector<IVec>& rs) {
    return from_rows(rs, rs.empty() ? 0 : rs[0].size());
}

IMat IMat::from_rows(const std::vector<IVec>& rs, size_t ncols) {
    IMat m(rs.size(), ncols);
    for (size_t r = 0; r < rs.size(); ++r) {
        if (rs[r].size() != m.cols) throw ValidationError("ragged matrix rows");
        for (size_t c = 0; c < m.cols; ++c) m.at(r, c) = rs[r][c];
    }
    return m;
}

std::vector<IVec> IMat::row_list() const {
    std::vector<IVec> rs(rows);
    for (size_t r = 0; r < rows; ++r) rs[r] = row(r);
    return rs;
}

IMat IMat::transposed() const {
    IMat t(cols, rows);
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
    return t;
}

namespace {

void swap_rows(IMat& m, size_t i, size_t j) {
    for (size_t c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}

void add_row_multiple(IMat& m, size_t dst, size_t src, const Int& k) {
    for (size_t c = 0; c < m.cols; ++c) m.at(dst, c) += k * m.at(src, c);
}

void negate_row(IMat& m, size_t r) {
    for (size_t c = 0; c < m.cols; ++c) m.at(r, c) = -m.at(r, c);
}

}  // namespace

HermiteResult hermite_normal_form(const IMat& m) {
    HermiteResult res;
    res.h = m;
    res.u = IMat(m.rows, m.rows);
    for (size_t i = 0; i < m.rows; ++i) res.u.at(i, i) = 1;
    IMat& h = res.h;
    IMat& u = res.u;

    size_t r = 0;
    for (size_t c = 0; c < m.cols && r < m.rows; ++c) {
        // Euclid on the column below row r until one nonzero entry remains.
        while (true) {
            size_t best = m.rows;
            for (size_t i = r; i < m.rows; ++i) {
                if (h.at(i, c) == 0) continue;
                if (best == m.rows ||
                    boost::multiprecision::abs(h.at(i, c)) < boost::multiprecision::abs(h.at(best, c)))
                    best = i;
            }
            if (best == m.rows) break;  // column clear below r
            if (best != r) {
                swap_rows(h, r, best);
                swap_rows(u, r, best);
            }
            bool done = true;
            for (size_t i = r + 1; i < m.rows; ++i) {
                if (h.at(i, c) == 0) continue;
                Int q = h.at(i, c) / h.at(r, c);  // truncated; remainder shrinks
                add_row_multiple(h, i, r, -q);
                add_row_multiple(u, i, r, -q);
                if (h.at(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (h.at(r, c) == 0) continue;
        if (h.at(r, c) < 0) {
            negate_row(h, r);
            negate_row(u, r);
        }
        for (size_t i = 0; i < r; ++i) {
            Int q = floor_div(h.at(i, c), h.at(r, c));
            if (q != 0) {
                add_row_multiple(h, i, r, -q);
                add_row_multiple(u, i, r, -q);
            }
        }
        res.pivot_cols.push_back(c);
        ++r;
    }
    return res;
}

bool is_full_lattice(const std::vector<IVec>& gens, size_t dim) {
    if (gens.empty()) return false;
    auto hnf = hermite_normal_form(IMat::from_rows(gens));
    if (hnf.pivot_cols.size() != dim) return false;
    for (size_t i = 0; i < dim; ++i)
        if (hnf.h.at(i, hnf.pivot_cols[i]) != 1) return false;
    return true;
}

size_t rank(const IMat& m) { return hermite_normal_form(m).pivot_cols.size(); }

Int det(const IMat& m) {
    if (m.rows != m.cols) throw ValidationError("determinant of non-square matrix");
    size_t n = m.rows;
    if (n == 0) return 1;
    // Bareiss fraction-free elimination.
    IMat w = m;
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            size_t p = k + 1;
            while (p < n && w.at(p, k) == 0) ++p;
            if (p == n) return 0;
            swap_rows(w, k, p);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
        prev = w.at(k, k);
    }
    return sign > 0 ? w.at(n - 1, n - 1) : -w.at(n - 1, n - 1);
}

IMat adjugate(const IMat& m) {
    if (m.rows != m.cols) throw ValidationError("adjugate of non-square matrix");
    size_t n = m.rows;
    IMat adj(n, n);
    if (n == 0) return adj;
    if (n == 1) {
        adj.at(0, 0) = 1;
        return adj;
    }
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) {
            IMat minor(n - 1, n - 1);
            for (size_t i = 0, mi = 0; i < n; ++i) {
                if (i == r) continue;
                for (size_t j = 0, mj = 0; j < n; ++j) {
                    if (j == c) continue;
                    minor.at(mi, mj) = m.at(i, j);
                    ++mj;
                }
                ++mi;
            }
            Int cof = det(minor);
            adj.at(c, r) = ((r + c) % 2 == 0) ? cof : -cof;
        }
    return adj;
}

std::optional<QVec> solve_unique(const std::vector<IVec>& lhs_rows, const QVec& rhs) {
    if (lhs_rows.empty()) return std::nullopt;
    size_t n = lhs_rows[0].size();
    size_t m = lhs_rows.size();
    if (rhs.size() != m) throw ValidationError("system shape mismatch");
    // Rational Gaussian elimination on the augmented matrix.
    std::vector<QVec> aug(m, QVec(n + 1));
    for (size_t r = 0; r < m; ++r) {
        for (size_t c = 0; c < n; ++c) aug[r][c] = Rat(lhs_rows[r][c]);
        aug[r][n] = rhs[r];
    }
    size_t row = 0;
    std::vector<size_t> pivot_of_col(n, m);
    for (size_t c = 0; c < n && row < m; ++c) {
        size_t p = row;
        while (p < m && aug[p][c] == 0) ++p;
        if (p == m) continue;
        std::swap(aug[p], aug[row]);
        Rat inv = aug[row][c];
        for (size_t j = c; j <= n; ++j) aug[row][j] /= inv;
        for (size_t i = 0; i < m; ++i) {
            if (i == row || aug[i][c] == 0) continue;
            Rat f = aug[i][c];
            for (size_t j = c; j <= n; ++j) aug[i][j] -= f * aug[row][j];
        }
        pivot_of_col[c] = row;
        ++row;
    }
    if (row != n) return std::nullopt;  // underdetermined
    for (size_t i = row; i < m; ++i)
        if (aug[i][n] != 0) return std::nullopt;  // inconsistent
    QVec x(n);
    for (size_t c = 0; c < n; ++c) x[c] = aug[pivot_of_col[c]][n];
    return x;
}

std::vector<IVec> kernel_basis(const std::vector<IVec>& functionals, size_t dim) {
    size_t m = functionals.size();
    std::vector<QVec> w(m, QVec(dim));
    for (size_t r = 0; r < m; ++r) {
        if (functionals[r].size() != dim) throw ValidationError("functional dimension mismatch");
        for (size_t c = 0; c < dim; ++c) w[r][c] = Rat(functionals[r][c]);
    }
    std::vector<size_t> pivot_col;
    size_t row = 0;
    for (size_t c = 0; c < dim && row < m; ++c) {
        size_t p = row;
        while (p < m && w[p][c] == 0) ++p;
        if (p == m) continue;
        std::swap(w[p], w[row]);
        Rat inv = w[row][c];
        for (size_t j = 0; j < dim; ++j) w[row][j] /= inv;
        for (size_t i = 0; i < m; ++i) {
            if (i == row || w[i][c] == 0) continue;
            Rat f = w[i][c];
            for (size_t j = 0; j < dim; ++j) w[i][j] -= f * w[row][j];
        }
        pivot_col.push_back(c);
        ++row;
    }
    std::vector<bool> is_pivot(dim, false);
    for (size_t c : pivot_col) is_pivot[c] = true;
    std::vector<IVec> basis;
    for (size_t free = 0; free < dim; ++free) {
        if (is_pivot[free]) continue;
        QVec v(dim, Rat(0));
        v[free] = 1;
        for (size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -w[r][free];
        basis.push_back(primitive_direction(v));
    }
    return basis;
}

bool lex_less(const IVec& a, const IVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace hk
