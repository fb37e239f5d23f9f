#include "hk/oracles.hpp"

#include <algorithm>
#include <map>

namespace hk {

namespace {

using u64 = unsigned long long;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((__uint128_t)a * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

using SparseRow = std::vector<std::pair<size_t, u64>>;

// Sort by column, combine duplicates, drop zeros.
void normalize_row(SparseRow& row, u64 p) {
    std::sort(row.begin(), row.end());
    SparseRow out;
    for (const auto& [col, val] : row) {
        u64 v = val % p;
        if (!out.empty() && out.back().first == col) {
            out.back().second = (out.back().second + v) % p;
            if (out.back().second == 0) out.pop_back();
        } else if (v != 0) {
            out.emplace_back(col, v);
        }
    }
    row = std::move(out);
}

// row -= coef * piv, both sorted; result sorted.
SparseRow axpy(const SparseRow& row, u64 coef, const SparseRow& piv, u64 p) {
    SparseRow out;
    size_t i = 0, j = 0;
    while (i < row.size() || j < piv.size()) {
        if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
            out.push_back(row[i++]);
        } else if (i == row.size() || piv[j].first < row[i].first) {
            u64 v = (p - mulmod(coef, piv[j].second, p)) % p;
            if (v) out.emplace_back(piv[j].first, v);
            ++j;
        } else {
            u64 v = (row[i].second + p - mulmod(coef, piv[j].second, p)) % p;
            if (v) out.emplace_back(row[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

size_t fp_rank(FpMatrix m) {
    std::map<size_t, SparseRow> pivots;  // leading column -> row with that pivot
    size_t rank = 0;
    for (SparseRow& row : m.rows) {
        normalize_row(row, m.p);
        while (!row.empty()) {
            auto it = pivots.find(row.front().first);
            if (it == pivots.end()) {
                // Scale so the leading entry is 1.
                u64 inv = powmod(row.front().second, m.p - 2, m.p);
                for (auto& [col, val] : row) val = mulmod(val, inv, m.p);
                pivots.emplace(row.front().first, std::move(row));
                ++rank;
                break;
            }
            row = axpy(row, row.front().second, it->second, m.p);
        }
    }
    return rank;
}

Int semigroup_bfs_hk(const AffineSemigroup& m, const MonomialIdeal& ideal, const Int& p,
                     unsigned e) {
    if (!is_prime(p)) throw ValidationError("p must be prime");
    if (!m.is_normal()) throw ValidationError("BFS oracle requires a normal semigroup");
    Polycell pc = Polycell::create(m, ideal);
    Int q = int_pow(p, e);

    IVec w(m.dim(), Int(0));
    for (const IVec& n : m.hyperplanes().normals) w = vadd(w, n);
    // Every lattice point of q*P has w-grading at most the maximum over the
    // scaled vertices; the generator slack keeps the bound safely coarse.
    Rat maxv(0);
    const std::vector<QVec> verts = m.dim() <= 3 ? pc.vertices() : pc.candidate_vertices();
    for (const QVec& v : verts) {
        Rat val = dotq(w, v);
        if (val > maxv) maxv = val;
    }
    Int bound = rat_floor(Rat(q) * maxv);
    Int slack = 0;
    for (const IVec& g : m.generators()) slack = std::max(slack, dot(w, g));
    bound += slack;

    std::vector<IVec> scaled;
    for (const IVec& d : ideal.exps) {
        IVec qd(d.size());
        for (size_t k = 0; k < d.size(); ++k) qd[k] = q * d[k];
        scaled.push_back(std::move(qd));
    }
    Int count = 0;
    for (const IVec& x : m.enumerate_below(w, bound)) {
        bool excluded = false;
        for (const IVec& qd : scaled) {
            if (m.contains(vsub(x, qd))) {
                excluded = true;
                break;
            }
        }
        if (!excluded) ++count;
    }
    return count;
}

HypersurfacePresentation HypersurfacePresentation::create(const Int& p, size_t s,
                                                          std::vector<std::pair<IVec, Int>> terms) {
    if (!is_prime(p)) throw ValidationError("p must be prime");
    if (s == 0) throw ValidationError("variable count must be positive");
    bool nonzero = false;
    std::vector<IVec> seen;
    for (auto& [exp, c] : terms) {
        if (exp.size() != s) throw ValidationError("term exponent has wrong arity");
        for (const Int& v : exp)
            if (v < 0) throw ValidationError("term exponent must be nonnegative");
        seen.push_back(exp);
        c %= p;
        if (c < 0) c += p;
        if (c != 0) nonzero = true;
    }
    std::sort(seen.begin(), seen.end(), lex_less);
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw ValidationError("duplicate term exponent");
    if (!nonzero) throw ValidationError("f is zero mod p");
    HypersurfacePresentation f;
    f.p = p;
    f.s = s;
    f.terms = std::move(terms);
    return f;
}

Int hk_hypersurface(const HypersurfacePresentation& f, unsigned e) {
    const Int q = int_pow(f.p, e);
    Int basis = 1;
    for (size_t k = 0; k < f.s; ++k) basis *= q;
    if (basis > 10000000)
        throw InfeasibleError("hypersurface oracle supports q^s <= 10^7, requested q^s = " +
                              basis.str());
    const size_t n = static_cast<size_t>(basis.convert_to<u64>());
    const u64 qq = q.convert_to<u64>();
    const u64 p = f.p.convert_to<u64>();

    std::vector<std::pair<std::vector<u64>, u64>> terms;
    for (const auto& [exp, c] : f.terms) {
        Int cc = c % f.p;
        if (cc < 0) cc += f.p;
        if (cc == 0) continue;
        std::vector<u64> ex(f.s);
        for (size_t k = 0; k < f.s; ++k) ex[k] = exp[k].convert_to<u64>();
        terms.emplace_back(std::move(ex), cc.convert_to<u64>());
    }

    std::vector<u64> stride(f.s, 1);
    for (size_t k = 1; k < f.s; ++k) stride[k] = stride[k - 1] * qq;

    FpMatrix mat;
    mat.p = p;
    mat.nrows = mat.ncols = n;
    mat.rows.resize(n);
    std::vector<u64> a(f.s, 0);
    for (size_t idx = 0; idx < n; ++idx) {
        for (const auto& [ex, c] : terms) {
            size_t col = 0;
            bool alive = true;
            for (size_t k = 0; k < f.s && alive; ++k) {
                u64 b = a[k] + ex[k];
                if (b >= qq)
                    alive = false;
                else
                    col += b * stride[k];
            }
            if (alive) mat.rows[idx].emplace_back(col, c);
        }
        size_t k = 0;
        while (k < f.s && a[k] + 1 == qq) a[k++] = 0;
        if (k < f.s) ++a[k];
    }
    return Int(n) - Int(fp_rank(std::move(mat)));
}

}  // namespace hk
