#include "hk/lp.hpp"

namespace hk::lp {

namespace {

// Dense simplex tableau over Rat. Variables are indexed columns; the last
// column is the right-hand side. Minimizes via Bland's rule (terminates).
struct Tableau {
    size_t m, n;  // constraints, structural columns
    std::vector<QVec> t;  // m rows of n+1
    QVec cost;            // n entries
    Rat cost_rhs = 0;
    std::vector<size_t> basis;  // per row, basic column

    Tableau(size_t m_, size_t n_) : m(m_), n(n_), t(m_, QVec(n_ + 1, Rat(0))), cost(n_, Rat(0)), basis(m_, 0) {}

    void price_out_basis() {
        for (size_t r = 0; r < m; ++r) {
            Rat f = cost[basis[r]];
            if (f == 0) continue;
            for (size_t c = 0; c < n; ++c) cost[c] -= f * t[r][c];
            cost_rhs -= f * t[r][n];
        }
    }

    void pivot(size_t row, size_t col) {
        Rat inv = t[row][col];
        for (size_t c = 0; c <= n; ++c) t[row][c] /= inv;
        for (size_t r = 0; r < m; ++r) {
            if (r == row || t[r][col] == 0) continue;
            Rat f = t[r][col];
            for (size_t c = 0; c <= n; ++c) t[r][c] -= f * t[row][c];
        }
        Rat f = cost[col];
        if (f != 0) {
            for (size_t c = 0; c < n; ++c) cost[c] -= f * t[row][c];
            cost_rhs -= f * t[row][n];
        }
        basis[row] = col;
    }

    // Returns false when unbounded.
    bool run(size_t usable_cols) {
        while (true) {
            size_t enter = usable_cols;
            for (size_t c = 0; c < usable_cols; ++c)
                if (cost[c] < 0) {
                    enter = c;
                    break;
                }
            if (enter == usable_cols) return true;
            size_t leave = m;
            Rat best;
            for (size_t r = 0; r < m; ++r) {
                if (t[r][enter] <= 0) continue;
                Rat ratio = t[r][n] / t[r][enter];
                if (leave == m || ratio < best || (ratio == best && basis[r] < basis[leave])) {
                    leave = r;
                    best = ratio;
                }
            }
            if (leave == m) return false;
            pivot(leave, enter);
        }
    }
};

}  // namespace

Result maximize(const Problem& p, const QVec& objective) {
    if (objective.size() != p.nvars) throw ValidationError("objective dimension mismatch");
    size_t m = p.rows.size();
    // Columns: x+ (nvars), x- (nvars), one slack or surplus per inequality,
    // then one artificial per row.
    size_t nslack = 0;
    for (const auto& r : p.rows)
        if (r.rel != Rel::EQ) ++nslack;
    size_t n_struct = 2 * p.nvars + nslack;
    size_t n_total = n_struct + m;
    Tableau tab(m, n_total);

    size_t slack_at = 2 * p.nvars;
    for (size_t r = 0; r < m; ++r) {
        const Row& row = p.rows[r];
        if (row.a.size() != p.nvars) throw ValidationError("row dimension mismatch");
        Rat sgn = 1;
        Rat b = row.b;
        Rel rel = row.rel;
        if (b < 0) {  // normalize rhs nonnegative
            sgn = -1;
            b = -b;
            if (rel == Rel::LE)
                rel = Rel::GE;
            else if (rel == Rel::GE)
                rel = Rel::LE;
        }
        for (size_t v = 0; v < p.nvars; ++v) {
            tab.t[r][v] = sgn * row.a[v];
            tab.t[r][p.nvars + v] = -sgn * row.a[v];
        }
        if (row.rel != Rel::EQ) {
            tab.t[r][slack_at] = (rel == Rel::LE) ? Rat(1) : Rat(-1);
            ++slack_at;
        }
        tab.t[r][n_total] = b;
        tab.t[r][n_struct + r] = 1;
        tab.basis[r] = n_struct + r;
    }

    // Phase 1: minimize the artificial sum.
    for (size_t r = 0; r < m; ++r) tab.cost[n_struct + r] = 1;
    tab.price_out_basis();
    tab.run(n_total);
    if (tab.cost_rhs != 0) return {Status::Infeasible, 0, {}};

    // Drive artificials out of the basis; drop rows that stay artificial.
    for (size_t r = 0; r < m; ++r) {
        if (tab.basis[r] < n_struct) continue;
        size_t c = 0;
        while (c < n_struct && tab.t[r][c] == 0) ++c;
        if (c < n_struct) tab.pivot(r, c);
    }

    // Phase 2; artificial columns stay out (entering scan stops at n_struct,
    // and rows still basic in an artificial are all-zero structurally).
    tab.cost.assign(n_total, Rat(0));
    tab.cost_rhs = 0;
    for (size_t v = 0; v < p.nvars; ++v) {
        tab.cost[v] = -objective[v];  // minimize -obj
        tab.cost[p.nvars + v] = objective[v];
    }
    tab.price_out_basis();
    if (!tab.run(n_struct)) return {Status::Unbounded, 0, {}};

    QVec x(p.nvars, Rat(0));
    for (size_t r = 0; r < m; ++r) {
        if (tab.basis[r] < p.nvars)
            x[tab.basis[r]] += tab.t[r][n_total];
        else if (tab.basis[r] < 2 * p.nvars)
            x[tab.basis[r] - p.nvars] -= tab.t[r][n_total];
    }
    Rat val = 0;
    for (size_t v = 0; v < p.nvars; ++v) val += objective[v] * x[v];
    return {Status::Optimal, val, x};
}

std::optional<QVec> feasible_point(const Problem& p) {
    Result r = maximize(p, QVec(p.nvars, Rat(0)));
    if (r.status == Status::Optimal) return r.x;
    return std::nullopt;
}

}  // namespace hk::lp
