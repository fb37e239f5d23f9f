#include "hk/cone.hpp"

#include <algorithm>
#include <set>

namespace hk {

namespace {

// Indices of dim linearly independent generators, greedily.
std::vector<size_t> independent_subset(const std::vector<IVec>& gens, size_t dim) {
    std::vector<size_t> idx;
    std::vector<IVec> rows;
    for (size_t i = 0; i < gens.size() && idx.size() < dim; ++i) {
        rows.push_back(gens[i]);
        if (rank(IMat::from_rows(rows, dim)) == idx.size() + 1) {
            idx.push_back(i);
        } else {
            rows.pop_back();
        }
    }
    return idx;
}

}  // namespace

std::vector<IVec> dual_cone_rays(const std::vector<IVec>& gens, size_t dim) {
    if (dim == 0) return {};
    std::vector<size_t> init = independent_subset(gens, dim);
    if (init.size() < dim) throw ValidationError("generators do not span the ambient space");

    // Inequalities processed so far (rows a with a . y >= 0 required).
    std::vector<IVec> ineqs;
    for (size_t i : init) ineqs.push_back(gens[i]);

    // Initial rays: signed adjugate columns of the simplicial block, so that
    // ineqs[k] . ray[j] = |det| * delta_kj >= 0.
    IMat a0 = IMat::from_rows(ineqs, dim);
    Int d0 = det(a0);
    IMat adj = adjugate(a0);
    Int s = d0 < 0 ? Int(-1) : Int(1);
    std::vector<IVec> rays;
    for (size_t j = 0; j < dim; ++j) {
        IVec r(dim);
        for (size_t i = 0; i < dim; ++i) r[i] = s * adj.at(i, j);
        rays.push_back(primitive_vector(r));
    }

    std::set<size_t> used(init.begin(), init.end());
    for (size_t gi = 0; gi < gens.size(); ++gi) {
        if (used.count(gi)) continue;
        const IVec& g = gens[gi];
        std::vector<IVec> pos, zero, neg;
        std::vector<Int> posv, negv;
        for (const IVec& r : rays) {
            Int v = dot(g, r);
            if (v > 0) {
                pos.push_back(r);
                posv.push_back(v);
            } else if (v < 0) {
                neg.push_back(r);
                negv.push_back(-v);
            } else {
                zero.push_back(r);
            }
        }
        if (neg.empty()) {
            ineqs.push_back(g);
            continue;
        }
        std::vector<IVec> next = zero;
        next.insert(next.end(), pos.begin(), pos.end());
        for (size_t i = 0; i < pos.size(); ++i) {
            for (size_t j = 0; j < neg.size(); ++j) {
                // Adjacency: common tight inequalities have rank dim-2.
                std::vector<IVec> tight;
                for (const IVec& a : ineqs) {
                    if (dot(a, pos[i]) == 0 && dot(a, neg[j]) == 0) tight.push_back(a);
                }
                if (dim >= 2 && rank(IMat::from_rows(tight, dim)) != dim - 2) continue;
                IVec r(dim);
                for (size_t k = 0; k < dim; ++k) r[k] = posv[i] * neg[j][k] + negv[j] * pos[i][k];
                if (is_zero(r)) continue;
                next.push_back(primitive_vector(r));
            }
        }
        std::sort(next.begin(), next.end(), lex_less);
        next.erase(std::unique(next.begin(), next.end()), next.end());
        rays = std::move(next);
        ineqs.push_back(g);
    }
    std::sort(rays.begin(), rays.end(), lex_less);
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
    return rays;
}

bool is_pointed(const std::vector<IVec>& gens, size_t dim) {
    std::vector<IVec> nz;
    for (const IVec& g : gens) {
        if (!is_zero(g)) nz.push_back(g);
    }
    if (nz.empty()) return true;
    size_t r = rank(IMat::from_rows(nz, dim));
    if (r < dim) {
        // Rewrite each generator in coordinates of a lattice basis of the span.
        HermiteResult h = hermite_normal_form(IMat::from_rows(nz, dim));
        std::vector<IVec> basis;
        for (size_t i = 0; i < r; ++i) basis.push_back(h.h.row(i));
        std::vector<IVec> proj;
        for (const IVec& g : nz) {
            IVec res = g, c(r);
            for (size_t i = 0; i < r; ++i) {
                size_t p = h.pivot_cols[i];
                c[i] = res[p] / basis[i][p];
                for (size_t k = 0; k < dim; ++k) res[k] -= c[i] * basis[i][k];
            }
            if (!is_zero(res)) throw ValidationError("generator outside its own lattice span");
            proj.push_back(c);
        }
        return is_pointed(proj, r);
    }
    std::vector<IVec> normals = dual_cone_rays(nz, dim);
    return rank(IMat::from_rows(normals, dim)) == dim;
}

SupportHyperplanes support_hyperplanes(const std::vector<IVec>& gens, size_t dim) {
    SupportHyperplanes sh;
    sh.dim = dim;
    sh.normals = dual_cone_rays(gens, dim);
    if (rank(IMat::from_rows(sh.normals, dim)) != dim)
        throw ValidationError("cone is not pointed");
    return sh;
}

std::vector<IVec> extreme_rays(const std::vector<IVec>& gens, const SupportHyperplanes& h) {
    std::vector<IVec> out;
    for (const IVec& g : gens) {
        if (is_zero(g)) continue;
        IVec p = primitive_vector(g);
        std::vector<IVec> tight;
        for (const IVec& n : h.normals) {
            if (dot(n, p) == 0) tight.push_back(n);
        }
        if (h.dim >= 1 && rank(IMat::from_rows(tight, h.dim)) + 1 >= h.dim) out.push_back(p);
    }
    std::sort(out.begin(), out.end(), lex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace hk
