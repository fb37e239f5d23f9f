#include "hk/semigroup.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace hk {

AffineSemigroup AffineSemigroup::create(std::vector<IVec> generators, size_t dim) {
    if (dim == 0) throw ValidationError("dimension must be positive");
    std::vector<IVec> gens;
    for (IVec& g : generators) {
        if (g.size() != dim) throw ValidationError("generator has wrong dimension");
        if (!is_zero(g)) gens.push_back(std::move(g));
    }
    std::sort(gens.begin(), gens.end(), lex_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    if (gens.empty()) throw ValidationError("no nonzero generators");
    if (!is_pointed(gens, dim)) throw ValidationError("not pointed: cone(M) contains a line");
    if (!is_full_lattice(gens, dim))
        throw ValidationError("lattice not full: generators span a proper sublattice of Z^d");

    AffineSemigroup m;
    m.dim_ = dim;
    m.gens_ = std::move(gens);
    m.hyp_ = support_hyperplanes(m.gens_, dim);
    m.extreme_ = hk::extreme_rays(m.gens_, m.hyp_);
    m.memo_ = std::make_shared<Memo>();
    return m;
}

Int AffineSemigroup::total_weight(const IVec& x) const {
    Int w = 0;
    for (const IVec& n : hyp_.normals) w += dot(n, x);
    return w;
}

bool AffineSemigroup::contains(const IVec& x) const {
    if (x.size() != dim_) throw ValidationError("point has wrong dimension");
    if (is_zero(x)) return true;
    for (const IVec& n : hyp_.normals) {
        if (dot(n, x) < 0) return false;
    }
    {
        std::lock_guard<std::mutex> lock(memo_->mu);
        auto it = memo_->entries.find(x);
        if (it != memo_->entries.end()) return it->second;
    }
    bool ok = false;
    for (const IVec& g : gens_) {
        if (contains(vsub(x, g))) {
            ok = true;
            break;
        }
    }
    std::lock_guard<std::mutex> lock(memo_->mu);
    memo_->entries.emplace(x, ok);
    return ok;
}

bool AffineSemigroup::is_normal() const {
    // Every cone point of Z^d decomposes as (member) + (lattice point of the
    // generator zonotope), so scanning the zonotope bounding box suffices.
    IVec lo(dim_, Int(0)), hi(dim_, Int(0));
    for (const IVec& g : gens_) {
        for (size_t k = 0; k < dim_; ++k) {
            if (g[k] < 0) lo[k] += g[k];
            if (g[k] > 0) hi[k] += g[k];
        }
    }
    IVec x = lo;
    while (true) {
        bool in_cone = true;
        for (const IVec& n : hyp_.normals) {
            if (dot(n, x) < 0) {
                in_cone = false;
                break;
            }
        }
        if (in_cone && !contains(x)) return false;
        size_t k = 0;
        while (k < dim_ && x[k] == hi[k]) {
            x[k] = lo[k];
            ++k;
        }
        if (k == dim_) break;
        x[k] += 1;
    }
    return true;
}

std::vector<IVec> AffineSemigroup::enumerate_below(const IVec& w, const Int& bound) const {
    if (w.size() != dim_) throw ValidationError("weight functional has wrong dimension");
    for (const IVec& g : gens_) {
        if (dot(w, g) <= 0)
            throw ValidationError("weight functional not strictly positive on generator " +
                                  to_string(g));
    }
    std::set<IVec> seen;
    std::deque<IVec> queue;
    IVec zero(dim_, Int(0));
    if (bound >= 0) {
        seen.insert(zero);
        queue.push_back(zero);
    }
    while (!queue.empty()) {
        IVec x = std::move(queue.front());
        queue.pop_front();
        for (const IVec& g : gens_) {
            IVec y = vadd(x, g);
            if (dot(w, y) > bound) continue;
            if (seen.insert(y).second) queue.push_back(y);
        }
    }
    return std::vector<IVec>(seen.begin(), seen.end());
}

MonomialIdeal MonomialIdeal::create(const AffineSemigroup& m, std::vector<IVec> exps) {
    std::sort(exps.begin(), exps.end(), lex_less);
    exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
    if (exps.empty()) throw ValidationError("ideal has no generators");
    for (const IVec& e : exps) {
        if (e.size() != m.dim()) throw ValidationError("ideal exponent has wrong dimension");
        if (!m.contains(e))
            throw ValidationError("ideal exponent " + to_string(e) + " is not in the semigroup");
    }
    // Drop exponents whose shifted cone lies inside another's.
    const auto& normals = m.hyperplanes().normals;
    std::vector<IVec> kept;
    for (size_t j = 0; j < exps.size(); ++j) {
        bool redundant = false;
        for (size_t k = 0; k < exps.size() && !redundant; ++k) {
            if (k == j) continue;
            // exps[j] - exps[k] in cone(M); mutual containment would force
            // equality, which dedup already removed.
            bool inside = true;
            for (const IVec& n : normals) {
                if (dot(n, vsub(exps[j], exps[k])) < 0) {
                    inside = false;
                    break;
                }
            }
            redundant = inside;
        }
        if (!redundant) kept.push_back(exps[j]);
    }
    MonomialIdeal ideal;
    ideal.exps = std::move(kept);
    return ideal;
}

}  // namespace hk
