#ifndef HK_CONE_HPP
#define HK_CONE_HPP

#include "hk/linalg.hpp"

namespace hk {

// Irredundant facet description of a full-dimensional pointed rational cone:
// the extreme rays of the dual cone, primitive and lexicographically sorted.
struct SupportHyperplanes {
    size_t dim = 0;
    std::vector<IVec> normals;

    QVec embed(const QVec& x) const {
        QVec v(normals.size());
        for (size_t i = 0; i < normals.size(); ++i) v[i] = dotq(normals[i], x);
        return v;
    }
    IVec embed(const IVec& x) const {
        IVec v(normals.size());
        for (size_t i = 0; i < normals.size(); ++i) v[i] = dot(normals[i], x);
        return v;
    }
};

// Extreme rays of {y : g . y >= 0 for every generator}, computed by the
// incremental double description method. Generators must span R^dim.
std::vector<IVec> dual_cone_rays(const std::vector<IVec>& gens, size_t dim);

// cone(gens) contains no line; rank-deficient inputs are projected onto
// integer coordinates of their span first.
bool is_pointed(const std::vector<IVec>& gens, size_t dim);

// Facet normals of cone(gens); requires a pointed full-dimensional cone.
SupportHyperplanes support_hyperplanes(const std::vector<IVec>& gens, size_t dim);

// Primitive generators lying on >= dim-1 independent facets.
std::vector<IVec> extreme_rays(const std::vector<IVec>& gens, const SupportHyperplanes& h);

}  // namespace hk

#endif
