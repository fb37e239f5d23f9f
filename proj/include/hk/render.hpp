#ifndef HK_RENDER_HPP
#define HK_RENDER_HPP

#include "hk/cells.hpp"

namespace hk {

// SVG picture of n*P for a 2-dimensional polycell: the cone edges, the
// staircase boundary of the union of shifted cones, one <circle
// class="lattice-point"> per point of n*P, and, when classes are given, the
// arrangement cells scaled by n and color-keyed by class. All arithmetic is
// exact; floating point appears only when coordinates are laid out on the
// page.
std::string emit_svg(const Polycell& pc, const Int& n,
                     const std::vector<ConicClass>* classes = nullptr);

}  // namespace hk

#endif
