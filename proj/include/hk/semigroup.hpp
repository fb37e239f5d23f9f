#ifndef HK_SEMIGROUP_HPP
#define HK_SEMIGROUP_HPP

#include <map>
#include <memory>
#include <mutex>

#include "hk/cone.hpp"

namespace hk {

// Affine semigroup M = N-span of integer generators, validated so that
// cone(M) is pointed and ZM = Z^dim (so M is the semigroup of a local
// normal affine monoid algebra once is_normal holds).
class AffineSemigroup {
  public:
    static AffineSemigroup create(std::vector<IVec> generators, size_t dim);

    size_t dim() const { return dim_; }
    const std::vector<IVec>& generators() const { return gens_; }
    const SupportHyperplanes& hyperplanes() const { return hyp_; }
    const std::vector<IVec>& extreme_rays() const { return extreme_; }

    // Membership x in M (not merely x in cone(M)).
    bool contains(const IVec& x) const;

    // M equals cone(M) \cap Z^dim.
    bool is_normal() const;

    // All members x with w(x) <= bound, for a functional w that is strictly
    // positive on every generator.
    std::vector<IVec> enumerate_below(const IVec& w, const Int& bound) const;

    // Sum of the facet forms; strictly positive on M \ {0}.
    Int total_weight(const IVec& x) const;

  private:
    AffineSemigroup() = default;

    struct Memo {
        std::mutex mu;
        std::map<IVec, bool> entries;
    };

    size_t dim_ = 0;
    std::vector<IVec> gens_;
    SupportHyperplanes hyp_;
    std::vector<IVec> extreme_;
    std::shared_ptr<Memo> memo_;
};

// Monomial ideal given by exponent vectors inside M; validated nonempty with
// every exponent a member of M.
struct MonomialIdeal {
    std::vector<IVec> exps;

    static MonomialIdeal create(const AffineSemigroup& m, std::vector<IVec> exps);
};

}  // namespace hk

#endif
