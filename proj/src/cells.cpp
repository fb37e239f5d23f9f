#include "hk/cells.hpp"

#include <algorithm>
#include <functional>

#include "hk/linalg.hpp"
#include "hk/lp.hpp"

namespace hk {

namespace {

// Visit every size-k index subset of [0, n).
void each_subset(size_t n, size_t k, std::vector<size_t>& pick,
                 const std::function<void(const std::vector<size_t>&)>& fn, size_t next = 0) {
    if (pick.size() == k) {
        fn(pick);
        return;
    }
    for (size_t i = next; i + (k - pick.size()) <= n; ++i) {
        pick.push_back(i);
        each_subset(n, k, pick, fn, i + 1);
        pick.pop_back();
    }
}

// Axis box spanned by the solutions of all dim-subsets of the given
// hyperplanes (rows[i] . x = rhs[i]); every bounded region whose faces lie
// on these hyperplanes is contained in it.
bool candidate_box(const std::vector<IVec>& rows, const IVec& rhs, size_t dim, QVec& lo, QVec& hi) {
    bool any = false;
    std::vector<size_t> pick;
    each_subset(rows.size(), dim, pick, [&](const std::vector<size_t>& idx) {
        std::vector<IVec> sub;
        IVec subr;
        for (size_t i : idx) {
            sub.push_back(rows[i]);
            subr.push_back(rhs[i]);
        }
        auto sol = solve_unique(sub, subr);
        if (!sol) return;
        if (!any) {
            lo = *sol;
            hi = *sol;
            any = true;
            return;
        }
        for (size_t k = 0; k < dim; ++k) {
            if ((*sol)[k] < lo[k]) lo[k] = (*sol)[k];
            if ((*sol)[k] > hi[k]) hi[k] = (*sol)[k];
        }
    });
    return any;
}

bool in_shifted_cone(const std::vector<IVec>& normals, const IVec& x, const IVec& shift) {
    for (const IVec& nrm : normals) {
        if (dot(nrm, vsub(x, shift)) < 0) return false;
    }
    return true;
}

}  // namespace

std::vector<ArrangementCell> cells_in_polycell(const Polycell& pc) {
    const AffineSemigroup& m = pc.semigroup();
    const std::vector<IVec>& normals = m.hyperplanes().normals;
    const size_t d = pc.dim();
    const size_t ell = normals.size();

    // The decomposition is defined for I = m: the ideal exponents must cut
    // exactly the region cut by the semigroup generators.
    auto covers = [&](const std::vector<IVec>& shifts, const IVec& x) {
        for (const IVec& s : shifts)
            if (in_shifted_cone(normals, x, s)) return true;
        return false;
    };
    for (const IVec& g : m.generators())
        if (!covers(pc.ideal().exps, g))
            throw ValidationError("BG decomposition defined for the maximal monomial ideal");
    for (const IVec& e : pc.ideal().exps)
        if (!covers(m.generators(), e))
            throw ValidationError("BG decomposition defined for the maximal monomial ideal");

    // Label ranges: 1 <= c_i <= ceil(sup sigma_i over P), the sup bounded by
    // the box corners.
    std::vector<Int> cmax(ell, Int(1));
    const QVec& lo = pc.box_lo();
    const QVec& hi = pc.box_hi();
    for (size_t i = 0; i < ell; ++i) {
        Rat best(0);
        for (size_t mask = 0; mask < (size_t(1) << d); ++mask) {
            Rat v(0);
            for (size_t k = 0; k < d; ++k)
                v += Rat(normals[i][k]) * ((mask >> k) & 1 ? hi[k] : lo[k]);
            if (v > best) best = v;
        }
        Int c = rat_ceil(best);
        if (c > cmax[i]) cmax[i] = c;
    }

    std::vector<ArrangementCell> cells;
    IVec label(ell, Int(1));
    while (true) {
        // Widest interior ball in sigma coordinates: maximize t subject to
        // c_i - 1 + t <= sigma_i(x) <= c_i - t; t > 0 certifies a
        // full-dimensional open cell with witness x.
        lp::Problem prob;
        prob.nvars = d + 1;
        for (size_t i = 0; i < ell; ++i) {
            QVec row = to_qvec(normals[i]);
            row.push_back(Rat(-1));
            prob.add(row, lp::Rel::GE, Rat(label[i] - 1));
            row[d] = Rat(1);
            prob.add(row, lp::Rel::LE, Rat(label[i]));
        }
        QVec tcap(d + 1, Rat(0));
        tcap[d] = Rat(1);
        prob.add(tcap, lp::Rel::LE, Rat(1, 2));
        auto res = lp::maximize(prob, tcap);
        if (res.status == lp::Status::Optimal && res.value > 0) {
            QVec witness(res.x.begin(), res.x.begin() + d);
            // Cells never straddle the boundary of P (all thresholds are
            // integral), so one interior point decides containment.
            if (pc.member(witness, Rat(1))) cells.push_back({label, std::move(witness)});
        }
        size_t i = 0;
        while (i < ell && label[i] == cmax[i]) {
            label[i] = 1;
            ++i;
        }
        if (i == ell) break;
        label[i] += 1;
    }
    std::sort(cells.begin(), cells.end(),
              [](const ArrangementCell& a, const ArrangementCell& b) {
                  return lex_less(a.label, b.label);
              });
    return cells;
}

std::vector<ConicClass> classify_cells(const std::vector<ArrangementCell>& cells,
                                       const SupportHyperplanes& h) {
    std::vector<ConicClass> classes;
    for (const ArrangementCell& cell : cells) {
        bool placed = false;
        for (ConicClass& cls : classes) {
            IVec diff = vsub(cell.label, cls.representative.label);
            auto sol = solve_unique(h.normals, diff);
            if (!sol) continue;
            bool integral = true;
            for (const Rat& z : *sol) integral = integral && is_integer(z);
            if (integral) {
                cls.members.push_back(cell);
                placed = true;
                break;
            }
        }
        if (!placed) classes.push_back({cell, {cell}, Int(0)});
    }
    return classes;
}

Int nu(const SupportHyperplanes& h, const ArrangementCell& cell, const Int& n) {
    if (n < 1) throw ValidationError("dilation factor must be positive");
    const size_t d = h.dim;
    const size_t ell = h.normals.size();
    std::vector<IVec> rows;
    IVec rhs;
    for (size_t i = 0; i < ell; ++i) {
        rows.push_back(h.normals[i]);
        rhs.push_back(n * (cell.label[i] - 1));
        rows.push_back(h.normals[i]);
        rhs.push_back(n * cell.label[i]);
    }
    QVec lo, hi;
    if (!candidate_box(rows, rhs, d, lo, hi)) return 0;
    IVec x(d), ilo(d), ihi(d);
    for (size_t k = 0; k < d; ++k) {
        ilo[k] = rat_ceil(lo[k]);
        ihi[k] = rat_floor(hi[k]);
        if (ilo[k] > ihi[k]) return 0;
        x[k] = ilo[k];
    }
    Int total = 0;
    while (true) {
        bool ok = true;
        for (size_t i = 0; i < ell && ok; ++i) {
            Int v = dot(h.normals[i], x);
            ok = v > n * (cell.label[i] - 1) && v <= n * cell.label[i];
        }
        if (ok) ++total;
        size_t k = 0;
        while (k < d && x[k] == ihi[k]) {
            x[k] = ilo[k];
            ++k;
        }
        if (k == d) break;
        x[k] += 1;
    }
    return total;
}

Int min_generators(const AffineSemigroup& m, const ArrangementCell& cell) {
    if (!m.is_normal())
        throw ValidationError("minimal generator count requires a normal semigroup");
    const std::vector<IVec>& normals = m.hyperplanes().normals;
    const size_t d = m.dim();
    const size_t ell = normals.size();
    const IVec& c = cell.label;

    // The module attached to the cell is S = {s : sigma(s) >= sigma(w)} for
    // any w in the open cell; w has non-integral sigma values inside
    // (c-1, c), so the integer thresholds are sigma_i(s) >= c_i. s is
    // non-minimal iff s - g stays in S for some generator g (any witness of
    // divisibility can be peeled one generator at a time because S + M
    // stays in S), i.e. s is minimal iff for every g some i has
    // sigma_i(s) <= sigma_i(g) + c_i - 1. Every face of that region lies on
    // one of the planes below, so their intersections span a box containing
    // all minimal elements.
    std::vector<IVec> rows;
    IVec rhs;
    for (size_t i = 0; i < ell; ++i) {
        rows.push_back(normals[i]);
        rhs.push_back(c[i]);
        for (const IVec& g : m.generators()) {
            rows.push_back(normals[i]);
            rhs.push_back(dot(normals[i], g) + c[i] - 1);
        }
    }
    QVec lo, hi;
    if (!candidate_box(rows, rhs, d, lo, hi)) return 0;
    IVec s(d), ilo(d), ihi(d);
    for (size_t k = 0; k < d; ++k) {
        ilo[k] = rat_ceil(lo[k]);
        ihi[k] = rat_floor(hi[k]);
        if (ilo[k] > ihi[k]) return 0;
        s[k] = ilo[k];
    }
    Int count = 0;
    while (true) {
        bool in_s = true;
        IVec sig(ell);
        for (size_t i = 0; i < ell && in_s; ++i) {
            sig[i] = dot(normals[i], s);
            in_s = sig[i] >= c[i];
        }
        if (in_s) {
            bool minimal = true;
            for (const IVec& g : m.generators()) {
                bool killed = false;
                for (size_t i = 0; i < ell && !killed; ++i)
                    killed = sig[i] <= dot(normals[i], g) + c[i] - 1;
                if (!killed) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) ++count;
        }
        size_t k = 0;
        while (k < d && s[k] == ihi[k]) {
            s[k] = ilo[k];
            ++k;
        }
        if (k == d) break;
        s[k] += 1;
    }
    return count;
}

Rat cell_volume(const SupportHyperplanes& h, const IVec& label, size_t dim) {
    std::vector<Halfspace> hs;
    for (size_t i = 0; i < h.normals.size(); ++i) {
        QVec a = to_qvec(h.normals[i]);
        hs.push_back({a, Rat(label[i])});
        for (Rat& v : a) v = -v;
        hs.push_back({a, Rat(1 - label[i])});
    }
    return polytope_volume(hs, dim);
}

Rat volume_via_cells(const Polycell& pc) {
    Rat total(0);
    for (const ArrangementCell& cell : cells_in_polycell(pc))
        total += cell_volume(pc.semigroup().hyperplanes(), cell.label, pc.dim());
    return total;
}

CellDecomposition CellDecomposition::create(const AffineSemigroup& m) {
    Polycell pc = Polycell::create(m, MonomialIdeal::create(m, m.generators()));
    std::vector<ArrangementCell> cells = cells_in_polycell(pc);
    std::vector<ConicClass> classes = classify_cells(cells, m.hyperplanes());
    for (ConicClass& cls : classes) cls.mu = min_generators(m, cls.representative);
    return CellDecomposition{std::move(pc), std::move(cells), std::move(classes)};
}

Int CellDecomposition::value(const Int& n) const {
    Int total = 0;
    for (const ConicClass& cls : classes)
        total += cls.mu * nu(pc.semigroup().hyperplanes(), cls.representative, n);
    return total;
}

Rat CellDecomposition::volume() const {
    Rat total(0);
    for (const ArrangementCell& cell : cells)
        total += cell_volume(pc.semigroup().hyperplanes(), cell.label, pc.dim());
    return total;
}

Int hk_via_cells(const AffineSemigroup& m, const Int& p, unsigned e) {
    if (!is_prime(p)) throw ValidationError("p must be prime");
    return CellDecomposition::create(m).value(int_pow(p, e));
}

}  // namespace hk
