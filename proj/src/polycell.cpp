#include "hk/polycell.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "hk/lp.hpp"

namespace hk {

namespace {

// Visit every k-subset of {0..n-1}.
template <class F>
void for_each_subset(size_t n, size_t k, F f) {
    if (k > n) return;
    std::vector<size_t> idx(k);
    std::iota(idx.begin(), idx.end(), size_t{0});
    while (true) {
        f(idx);
        size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Strict angular order of nonzero plane vectors, counterclockwise from the
// positive x-axis.
int plane_half(const Rat& x, const Rat& y) {
    return (y > 0 || (y == 0 && x > 0)) ? 0 : 1;
}
bool angle_less(const std::pair<Rat, Rat>& a, const std::pair<Rat, Rat>& b) {
    int ha = plane_half(a.first, a.second), hb = plane_half(b.first, b.second);
    if (ha != hb) return ha < hb;
    return a.first * b.second - a.second * b.first > 0;
}
Rat plane_cross(const std::pair<Rat, Rat>& a, const std::pair<Rat, Rat>& b) {
    return a.first * b.second - a.second * b.first;
}

long long t_floor_div(long long a, long long b) {
    long long q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}
long long t_ceil_div(long long a, long long b) { return -t_floor_div(-a, b); }
Int t_floor_div(const Int& a, const Int& b) { return floor_div(a, b); }
Int t_ceil_div(const Int& a, const Int& b) { return ceil_div(a, b); }

Int widen(long long v) { return Int(v); }
const Int& widen(const Int& v) { return v; }

template <class T>
struct CountKernel {
    size_t d = 0, nf = 0, nj = 0;
    std::vector<std::vector<T>> nm;    // facet forms, [nf][d]
    std::vector<std::vector<T>> nsig;  // n * sigma(d_j), [nj][nf]
    std::vector<T> blo, bhi;           // integer box bounds per coordinate
    std::vector<std::vector<T>> scratch;
    std::vector<std::pair<T, T>> iv;
    Int total{0};

    // Count points of the slice with coordinates 0..d-2 fixed; a holds the
    // partial value of each facet form on the fixed prefix.
    void line(const std::vector<T>& a) {
        T lo = blo[d - 1], hi = bhi[d - 1];
        for (size_t i = 0; i < nf; ++i) {
            const T& c = nm[i][d - 1];
            if (c == 0) {
                if (a[i] < 0) return;
            } else if (c > 0) {
                T b = t_ceil_div(T(-a[i]), c);
                if (b > lo) lo = b;
            } else {
                T b = t_floor_div(T(-a[i]), c);
                if (b < hi) hi = b;
            }
        }
        if (lo > hi) return;
        iv.clear();
        for (size_t j = 0; j < nj; ++j) {
            T lj = lo, uj = hi;
            bool empty = false;
            for (size_t i = 0; i < nf && !empty; ++i) {
                const T& c = nm[i][d - 1];
                T rhs = nsig[j][i] - a[i];
                if (c == 0) {
                    empty = rhs > 0;
                } else if (c > 0) {
                    T b = t_ceil_div(rhs, c);
                    if (b > lj) lj = b;
                } else {
                    T b = t_floor_div(rhs, c);
                    if (b < uj) uj = b;
                }
                if (lj > uj) empty = true;
            }
            if (!empty) iv.emplace_back(lj, uj);
        }
        T room = hi - lo + 1;
        if (iv.empty()) {
            total += widen(room);
            return;
        }
        std::sort(iv.begin(), iv.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        T covered = 0, cs = iv[0].first, ce = iv[0].second;
        for (size_t k = 1; k < iv.size(); ++k) {
            if (iv[k].first > ce + 1) {
                covered += ce - cs + 1;
                cs = iv[k].first;
                ce = iv[k].second;
            } else if (iv[k].second > ce) {
                ce = iv[k].second;
            }
        }
        covered += ce - cs + 1;
        total += widen(T(room - covered));
    }

    void descend(size_t k, const std::vector<T>& base) {
        std::vector<T>& cur = scratch[k];
        for (T u = blo[k]; u <= bhi[k]; ++u) {
            for (size_t i = 0; i < nf; ++i) cur[i] = base[i] + nm[i][k] * u;
            if (k + 2 == d) {
                line(cur);
            } else {
                descend(k + 1, cur);
            }
        }
    }

    Int run() {
        scratch.assign(d, std::vector<T>(nf, T(0)));
        std::vector<T> zero(nf, T(0));
        if (d == 1) {
            line(zero);
        } else {
            descend(0, zero);
        }
        return total;
    }
};

Int factorial(size_t n) {
    Int r = 1;
    for (size_t i = 2; i <= n; ++i) r *= Int(i);
    return r;
}

}  // namespace

Int int_pow(const Int& base, unsigned e) {
    Int r = 1;
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

bool is_prime(const Int& p) {
    if (p < 2) return false;
    for (Int f = 2; f * f <= p; ++f) {
        if (p % f == 0) return false;
    }
    return true;
}

Polycell Polycell::create(AffineSemigroup m, MonomialIdeal ideal) {
    Polycell pc(std::move(m), std::move(ideal));
    const auto& hyp = pc.m_.hyperplanes();
    const auto& normals = hyp.normals;
    size_t d = pc.m_.dim();
    for (const IVec& e : pc.ideal_.exps) pc.shift_sigma_.push_back(hyp.embed(e));

    // Bounded <=> the ideal is m-primary <=> every extreme ray of the cone
    // carries an ideal exponent.
    for (const IVec& r : pc.m_.extreme_rays()) {
        std::vector<size_t> tight;
        for (size_t i = 0; i < normals.size(); ++i) {
            if (dot(normals[i], r) == 0) tight.push_back(i);
        }
        bool carried = false;
        for (const IVec& sv : pc.shift_sigma_) {
            bool on_ray = true;
            for (size_t i : tight) {
                if (sv[i] != 0) {
                    on_ray = false;
                    break;
                }
            }
            if (on_ray) {
                carried = true;
                break;
            }
        }
        if (!carried) throw ValidationError("unbounded: ideal not m-primary");
    }

    // Active hyperplanes sigma_i(x) = c, c in {0} cup {sigma_i(d_j)}; every
    // vertex of cl(P) solves d independent ones, so their d-fold
    // intersections box the region.
    std::vector<std::pair<IVec, Int>> hyps;
    for (size_t i = 0; i < normals.size(); ++i) {
        hyps.emplace_back(normals[i], Int(0));
        for (const IVec& sv : pc.shift_sigma_) hyps.emplace_back(normals[i], sv[i]);
    }
    std::sort(hyps.begin(), hyps.end());
    hyps.erase(std::unique(hyps.begin(), hyps.end()), hyps.end());

    std::set<QVec> cand;
    for_each_subset(hyps.size(), d, [&](const std::vector<size_t>& idx) {
        std::vector<IVec> lhs;
        IVec rhs;
        for (size_t i : idx) {
            lhs.push_back(hyps[i].first);
            rhs.push_back(hyps[i].second);
        }
        if (auto x = solve_unique(lhs, rhs)) cand.insert(*x);
    });
    pc.candidates_.assign(cand.begin(), cand.end());

    pc.lo_.assign(d, Rat(0));
    pc.hi_.assign(d, Rat(0));
    for (size_t k = 0; k < d; ++k) {
        pc.lo_[k] = pc.candidates_.front()[k];
        pc.hi_[k] = pc.candidates_.front()[k];
        for (const QVec& v : pc.candidates_) {
            if (v[k] < pc.lo_[k]) pc.lo_[k] = v[k];
            if (v[k] > pc.hi_[k]) pc.hi_[k] = v[k];
        }
    }
    return pc;
}

bool Polycell::member(const IVec& x, const Int& n) const {
    IVec s = m_.hyperplanes().embed(x);
    for (const Int& v : s) {
        if (v < 0) return false;
    }
    for (const IVec& sv : shift_sigma_) {
        bool excluded = true;
        for (size_t i = 0; i < s.size(); ++i) {
            if (s[i] < n * sv[i]) {
                excluded = false;
                break;
            }
        }
        if (excluded) return false;
    }
    return true;
}

bool Polycell::member(const QVec& x, const Rat& n) const {
    QVec s = m_.hyperplanes().embed(x);
    for (const Rat& v : s) {
        if (v < 0) return false;
    }
    for (const IVec& sv : shift_sigma_) {
        bool excluded = true;
        for (size_t i = 0; i < s.size(); ++i) {
            if (s[i] < n * Rat(sv[i])) {
                excluded = false;
                break;
            }
        }
        if (excluded) return false;
    }
    return true;
}

Int Polycell::count(const Int& n) const {
    if (n <= 0) throw ValidationError("dilation factor must be positive");
    const auto& normals = m_.hyperplanes().normals;
    size_t d = dim(), nf = normals.size(), nj = shift_sigma_.size();

    IVec blo(d), bhi(d);
    for (size_t k = 0; k < d; ++k) {
        blo[k] = rat_ceil(Rat(n) * lo_[k]);
        bhi[k] = rat_floor(Rat(n) * hi_[k]);
        if (blo[k] > bhi[k]) return 0;
    }

    // Magnitude bound on every intermediate of the kernel.
    Int bound = 0;
    for (size_t i = 0; i < nf; ++i) {
        Int s = 0;
        for (size_t k = 0; k < d; ++k) {
            Int b = abs(blo[k]) > abs(bhi[k]) ? abs(blo[k]) : abs(bhi[k]);
            s += abs(normals[i][k]) * b;
        }
        for (size_t j = 0; j < nj; ++j) {
            Int t = s + abs(n * shift_sigma_[j][i]);
            if (t > bound) bound = t;
        }
        if (s > bound) bound = s;
    }

    if (bound < (Int(1) << 61)) {
        CountKernel<long long> k;
        k.d = d;
        k.nf = nf;
        k.nj = nj;
        k.nm.assign(nf, {});
        for (size_t i = 0; i < nf; ++i) {
            for (size_t c = 0; c < d; ++c) k.nm[i].push_back(normals[i][c].convert_to<long long>());
        }
        k.nsig.assign(nj, {});
        for (size_t j = 0; j < nj; ++j) {
            for (size_t i = 0; i < nf; ++i)
                k.nsig[j].push_back(Int(n * shift_sigma_[j][i]).convert_to<long long>());
        }
        for (size_t c = 0; c < d; ++c) {
            k.blo.push_back(blo[c].convert_to<long long>());
            k.bhi.push_back(bhi[c].convert_to<long long>());
        }
        return k.run();
    }
    CountKernel<Int> k;
    k.d = d;
    k.nf = nf;
    k.nj = nj;
    for (size_t i = 0; i < nf; ++i) k.nm.push_back(normals[i]);
    k.nsig.assign(nj, {});
    for (size_t j = 0; j < nj; ++j) {
        for (size_t i = 0; i < nf; ++i) k.nsig[j].push_back(n * shift_sigma_[j][i]);
    }
    k.blo = blo;
    k.bhi = bhi;
    return k.run();
}

Int Polycell::count_reference(const Int& n) const {
    if (n <= 0) throw ValidationError("dilation factor must be positive");
    size_t d = dim();
    IVec blo(d), bhi(d);
    for (size_t k = 0; k < d; ++k) {
        blo[k] = rat_ceil(Rat(n) * lo_[k]);
        bhi[k] = rat_floor(Rat(n) * hi_[k]);
        if (blo[k] > bhi[k]) return 0;
    }
    Int total = 0;
    IVec x = blo;
    while (true) {
        if (member(x, n)) ++total;
        size_t k = 0;
        while (k < d && x[k] == bhi[k]) {
            x[k] = blo[k];
            ++k;
        }
        if (k == d) break;
        x[k] += 1;
    }
    return total;
}

std::vector<QVec> Polycell::vertices() const {
    size_t d = dim();
    if (d > 3) throw ValidationError("vertex enumeration supports dimension <= 3 only");
    const auto& normals = m_.hyperplanes().normals;
    size_t nf = normals.size(), nj = shift_sigma_.size();

    if (d == 1) {
        // P in facet-form coordinates is [0, s_min).
        Int smin = shift_sigma_[0][0];
        for (const IVec& sv : shift_sigma_) {
            if (sv[0] < smin) smin = sv[0];
        }
        if (smin <= 0) return {};
        return {QVec{Rat(0)}, QVec{Rat(smin) / Rat(normals[0][0])}};
    }

    std::set<QVec> out;
    for (const QVec& v : candidates_) {
        QVec sv = m_.hyperplanes().embed(v);
        bool in_cone = true;
        for (const Rat& s : sv) {
            if (s < 0) {
                in_cone = false;
                break;
            }
        }
        if (!in_cone) continue;

        std::vector<size_t> a0;
        for (size_t i = 0; i < nf; ++i) {
            if (sv[i] == 0) a0.push_back(i);
        }
        // Exponents whose shifted cone contains v, and their tight forms.
        std::vector<std::vector<size_t>> aj;
        bool interior_excluded = false;
        for (size_t j = 0; j < nj; ++j) {
            bool inside = true;
            std::vector<size_t> tight;
            for (size_t i = 0; i < nf; ++i) {
                Rat diff = sv[i] - Rat(shift_sigma_[j][i]);
                if (diff < 0) {
                    inside = false;
                    break;
                }
                if (diff == 0) tight.push_back(i);
            }
            if (!inside) continue;
            if (tight.empty()) {
                interior_excluded = true;
                break;
            }
            aj.push_back(std::move(tight));
        }
        if (interior_excluded) continue;

        // Local shape of P at v: sigma_{a0}(u) >= 0 and, per contained shift,
        // some tight form strictly negative. Expand into pieces indexed by
        // hitting sets.
        std::vector<size_t> pool;
        for (const auto& t : aj) pool.insert(pool.end(), t.begin(), t.end());
        std::sort(pool.begin(), pool.end());
        pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

        std::vector<std::vector<size_t>> pieces;
        size_t npool = pool.size();
        for (size_t mask = 0; mask < (size_t{1} << npool); ++mask) {
            std::vector<size_t> s;
            for (size_t b = 0; b < npool; ++b) {
                if (mask & (size_t{1} << b)) s.push_back(pool[b]);
            }
            bool hits = true;
            for (const auto& t : aj) {
                bool hit = false;
                for (size_t i : t) {
                    if (std::binary_search(s.begin(), s.end(), i)) {
                        hit = true;
                        break;
                    }
                }
                if (!hit) {
                    hits = false;
                    break;
                }
            }
            if (!hits) continue;
            bool conflict = false;
            for (size_t i : s) {
                if (std::binary_search(a0.begin(), a0.end(), i)) {
                    conflict = true;
                    break;
                }
            }
            if (conflict) continue;
            lp::Problem pr(d);
            for (size_t i : a0) pr.add_int(normals[i], lp::Rel::GE, Int(0));
            for (size_t i : s) pr.add_int(normals[i], lp::Rel::LE, Int(-1));
            if (lp::feasible_point(pr)) pieces.push_back(std::move(s));
        }

        if (!member(v, Rat(1)) && pieces.empty()) continue;

        // u + eps*w lies in the closure of some piece, eps infinitesimal.
        auto in_closure = [&](const QVec& u, const QVec* w) {
            for (const auto& s : pieces) {
                bool ok = true;
                for (size_t i : a0) {
                    Rat val = dotq(normals[i], u);
                    Rat drift = w ? dotq(normals[i], *w) : Rat(0);
                    if (!(val > 0 || (val == 0 && drift >= 0))) {
                        ok = false;
                        break;
                    }
                }
                for (size_t i : s) {
                    if (!ok) break;
                    Rat val = dotq(normals[i], u);
                    Rat drift = w ? dotq(normals[i], *w) : Rat(0);
                    if (!(val < 0 || (val == 0 && drift <= 0))) {
                        ok = false;
                        break;
                    }
                }
                if (ok) return true;
            }
            return false;
        };

        std::vector<size_t> act = a0;
        for (const auto& t : aj) act.insert(act.end(), t.begin(), t.end());
        std::sort(act.begin(), act.end());
        act.erase(std::unique(act.begin(), act.end()), act.end());

        std::vector<IVec> act_rows;
        for (size_t i : act) act_rows.push_back(normals[i]);
        if (rank(IMat::from_rows(act_rows, d)) < d) continue;

        // A form is visible when P has a facet patch on its hyperplane at v:
        // some direction inside the hyperplane stays in cl(P) locally while
        // one perturbation across the hyperplane leaves it.
        std::vector<IVec> visible;
        for (size_t h : act) {
            std::vector<IVec> kb = kernel_basis({normals[h]}, d);
            std::vector<QVec> dirs;
            if (d == 2) {
                dirs.push_back(to_qvec(kb[0]));
                dirs.push_back(to_qvec(vsub(IVec(d, Int(0)), kb[0])));
            } else {
                // Directions cutting the plane: traces of the other active
                // forms; test one representative per open sector.
                std::vector<std::pair<Rat, Rat>> rays;
                for (size_t g : act) {
                    if (g == h) continue;
                    std::vector<IVec> line = kernel_basis({normals[h], normals[g]}, d);
                    if (line.size() != 1) continue;
                    std::vector<IVec> lhs;
                    IVec rhs;
                    for (size_t c = 0; c < d; ++c) {
                        lhs.push_back(IVec{kb[0][c], kb[1][c]});
                        rhs.push_back(line[0][c]);
                    }
                    auto coord = solve_unique(lhs, rhs);
                    if (!coord) continue;
                    rays.emplace_back((*coord)[0], (*coord)[1]);
                    rays.emplace_back(-(*coord)[0], -(*coord)[1]);
                }
                std::sort(rays.begin(), rays.end(), angle_less);
                rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
                std::vector<std::pair<Rat, Rat>> mids;
                if (rays.empty()) {
                    mids = {{Rat(1), Rat(0)}, {Rat(-1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(0), Rat(-1)}};
                } else {
                    for (size_t r = 0; r < rays.size(); ++r) {
                        const auto& a = rays[r];
                        const auto& b = rays[(r + 1) % rays.size()];
                        if (plane_cross(a, b) > 0) {
                            mids.emplace_back(a.first + b.first, a.second + b.second);
                        } else {
                            mids.emplace_back(-a.second, a.first);
                        }
                    }
                }
                for (const auto& mc : mids) {
                    QVec u(d);
                    for (size_t c = 0; c < d; ++c)
                        u[c] = mc.first * Rat(kb[0][c]) + mc.second * Rat(kb[1][c]);
                    dirs.push_back(std::move(u));
                }
            }
            QVec nh = to_qvec(normals[h]);
            QVec mnh(d);
            for (size_t c = 0; c < d; ++c) mnh[c] = -nh[c];
            bool vis = false;
            for (const QVec& u : dirs) {
                if (!in_closure(u, nullptr)) continue;
                if (!in_closure(u, &nh) || !in_closure(u, &mnh)) {
                    vis = true;
                    break;
                }
            }
            if (vis) visible.push_back(normals[h]);
        }
        if (rank(IMat::from_rows(visible, d)) == d) out.insert(v);
    }
    return {out.begin(), out.end()};
}

Rat polytope_volume(const std::vector<Halfspace>& hs, size_t dim) {
    if (dim == 0 || dim > 3) throw ValidationError("volume supported for dimension 1 to 3 only");
    std::set<QVec> vset;
    std::vector<std::vector<Rat>> lhs_rows;
    for_each_subset(hs.size(), dim, [&](const std::vector<size_t>& idx) {
        // Solve the dim x dim rational system by clearing denominators.
        std::vector<IVec> lhs;
        IVec rhs;
        for (size_t i : idx) {
            Int mult = 1;
            for (const Rat& c : hs[i].a) mult = mult / gcd(mult, den(c)) * den(c);
            mult = mult / gcd(mult, den(hs[i].b)) * den(hs[i].b);
            IVec row(dim);
            for (size_t c = 0; c < dim; ++c) {
                Rat scaled = hs[i].a[c] * Rat(mult);
                row[c] = num(scaled);
            }
            lhs.push_back(row);
            Rat sb = hs[i].b * Rat(mult);
            rhs.push_back(num(sb));
        }
        auto x = solve_unique(lhs, rhs);
        if (!x) return;
        for (const Halfspace& h : hs) {
            if (dotqq(h.a, *x) > h.b) return;
        }
        vset.insert(*x);
    });
    std::vector<QVec> verts(vset.begin(), vset.end());
    if (verts.size() < dim + 1) return Rat(0);

    if (dim == 1) {
        Rat lo = verts.front()[0], hi = lo;
        for (const QVec& v : verts) {
            if (v[0] < lo) lo = v[0];
            if (v[0] > hi) hi = v[0];
        }
        return hi - lo;
    }

    QVec o(dim, Rat(0));
    for (const QVec& v : verts) {
        for (size_t c = 0; c < dim; ++c) o[c] += v[c];
    }
    for (size_t c = 0; c < dim; ++c) o[c] /= Rat(Int(verts.size()));

    if (dim == 2) {
        std::vector<std::pair<Rat, Rat>> pts;
        for (const QVec& v : verts) pts.emplace_back(v[0] - o[0], v[1] - o[1]);
        std::sort(pts.begin(), pts.end(), angle_less);
        Rat area = 0;
        for (size_t i = 0; i < pts.size(); ++i) {
            area += plane_cross(pts[i], pts[(i + 1) % pts.size()]);
        }
        area /= 2;
        return area < 0 ? -area : area;
    }

    // dim == 3: fan each facet polygon from its centroid, tetrahedra to o.
    Rat vol = 0;
    std::set<std::vector<size_t>> seen_facets;
    for (const Halfspace& h : hs) {
        std::vector<size_t> fidx;
        for (size_t i = 0; i < verts.size(); ++i) {
            if (dotqq(h.a, verts[i]) == h.b) fidx.push_back(i);
        }
        if (fidx.size() < 3) continue;
        if (!seen_facets.insert(fidx).second) continue;
        // Plane basis from two independent edges.
        QVec e1, e2;
        bool have1 = false, have2 = false;
        for (size_t k = 1; k < fidx.size() && !have2; ++k) {
            QVec e = qsub(verts[fidx[k]], verts[fidx[0]]);
            if (!have1) {
                bool nz = false;
                for (const Rat& c : e) nz = nz || c != 0;
                if (nz) {
                    e1 = e;
                    have1 = true;
                }
            } else {
                Rat c0 = e1[1] * e[2] - e1[2] * e[1];
                Rat c1 = e1[2] * e[0] - e1[0] * e[2];
                Rat c2 = e1[0] * e[1] - e1[1] * e[0];
                if (c0 != 0 || c1 != 0 || c2 != 0) {
                    e2 = e;
                    have2 = true;
                }
            }
        }
        if (!have2) continue;
        QVec cf(3, Rat(0));
        for (size_t i : fidx) {
            for (size_t c = 0; c < 3; ++c) cf[c] += verts[i][c];
        }
        for (size_t c = 0; c < 3; ++c) cf[c] /= Rat(Int(fidx.size()));
        // Coordinates in the (e1, e2) frame for the angular sort.
        auto plane_coord = [&](const QVec& p) {
            Rat a11 = dotqq(e1, e1), a12 = dotqq(e1, e2), a22 = dotqq(e2, e2);
            Rat b1 = dotqq(e1, p), b2 = dotqq(e2, p);
            Rat det = a11 * a22 - a12 * a12;
            return std::pair<Rat, Rat>((b1 * a22 - b2 * a12) / det, (b2 * a11 - b1 * a12) / det);
        };
        std::vector<std::pair<std::pair<Rat, Rat>, size_t>> ordered;
        for (size_t i : fidx) ordered.emplace_back(plane_coord(qsub(verts[i], cf)), i);
        std::sort(ordered.begin(), ordered.end(),
                  [](const auto& a, const auto& b) { return angle_less(a.first, b.first); });
        QVec co = qsub(cf, o);
        for (size_t k = 0; k < ordered.size(); ++k) {
            QVec p = qsub(verts[ordered[k].second], o);
            QVec q = qsub(verts[ordered[(k + 1) % ordered.size()].second], o);
            Rat det = co[0] * (p[1] * q[2] - p[2] * q[1]) - co[1] * (p[0] * q[2] - p[2] * q[0]) +
                      co[2] * (p[0] * q[1] - p[1] * q[0]);
            vol += det < 0 ? -det : det;
        }
    }
    return vol / 6;
}

Rat Polycell::hilbert_samuel_multiplicity() const {
    size_t d = dim();
    if (d > 3) throw ValidationError("multiplicity supported for dimension <= 3 only");
    const auto& normals = m_.hyperplanes().normals;
    const auto& exps = ideal_.exps;

    // Facet normals of the exponent polyhedron conv(union_j d_j + cone):
    // kernels of (d-1)-subsets of exponent differences, extreme rays and
    // generators, oriented nonnegative on the cone.
    std::vector<IVec> dirs;
    for (size_t j = 0; j < exps.size(); ++j) {
        for (size_t k = j + 1; k < exps.size(); ++k) dirs.push_back(vsub(exps[j], exps[k]));
    }
    for (const IVec& r : m_.extreme_rays()) dirs.push_back(r);
    for (const IVec& g : m_.generators()) dirs.push_back(g);
    std::sort(dirs.begin(), dirs.end(), lex_less);
    dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());

    std::vector<std::pair<IVec, Int>> facets;
    for_each_subset(dirs.size(), d - 1, [&](const std::vector<size_t>& idx) {
        std::vector<IVec> rows;
        for (size_t i : idx) rows.push_back(dirs[i]);
        std::vector<IVec> kb = kernel_basis(rows, d);
        if (kb.size() != 1) return;
        IVec n = kb[0];
        bool pos = true, neg = true;
        for (const IVec& g : m_.generators()) {
            Int v = dot(n, g);
            if (v < 0) pos = false;
            if (v > 0) neg = false;
        }
        if (!pos && !neg) return;
        if (!pos) {
            for (Int& c : n) c = -c;
        }
        Int b = dot(n, exps[0]);
        for (const IVec& e : exps) {
            Int v = dot(n, e);
            if (v < b) b = v;
        }
        facets.emplace_back(std::move(n), std::move(b));
    });
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

    std::vector<Halfspace> cone_box, newton_box;
    for (const IVec& n : normals) {
        QVec a(d);
        for (size_t c = 0; c < d; ++c) a[c] = -Rat(n[c]);
        cone_box.push_back({a, Rat(0)});
        newton_box.push_back({a, Rat(0)});
    }
    for (size_t c = 0; c < d; ++c) {
        QVec up(d, Rat(0)), down(d, Rat(0));
        up[c] = 1;
        down[c] = -1;
        cone_box.push_back({up, hi_[c]});
        cone_box.push_back({down, -lo_[c]});
        newton_box.push_back({up, hi_[c]});
        newton_box.push_back({down, -lo_[c]});
    }
    for (const auto& [n, b] : facets) {
        QVec a(d);
        for (size_t c = 0; c < d; ++c) a[c] = -Rat(n[c]);
        newton_box.push_back({a, -Rat(b)});
    }
    Rat diff = polytope_volume(cone_box, d) - polytope_volume(newton_box, d);
    return Rat(factorial(d)) * diff;
}

Int hk_value(const Polycell& p, const Int& prime, unsigned e) {
    if (!is_prime(prime)) throw ValidationError("p must be prime");
    return p.count(int_pow(prime, e));
}

}  // namespace hk
