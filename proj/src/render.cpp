#include "hk/render.hpp"

#include <algorithm>
#include <cstdio>

namespace hk {

namespace {

struct Layout {
    double xmin, ymax, scale, margin;

    double px(double x) const { return margin + (x - xmin) * scale; }
    double py(double y) const { return margin + (ymax - y) * scale; }
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

double to_d(const Rat& r) { return r.convert_to<double>(); }

// x with sigma(x) = s for the two facet forms; the 2x2 normal matrix is
// invertible because the cone is full-dimensional.
QVec sigma_inverse(const std::vector<IVec>& nm, const Rat& s0, const Rat& s1) {
    Rat det = Rat(nm[0][0] * nm[1][1] - nm[0][1] * nm[1][0]);
    return {(Rat(nm[1][1]) * s0 - Rat(nm[0][1]) * s1) / det,
            (Rat(nm[0][0]) * s1 - Rat(nm[1][0]) * s0) / det};
}

const char* kPalette[] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f",
                          "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac"};

}  // namespace

std::string emit_svg(const Polycell& pc, const Int& n, const std::vector<ConicClass>* classes) {
    if (pc.dim() != 2) throw ValidationError("SVG only for dimension 2");
    if (n < 1) throw ValidationError("dilation factor must be positive");

    const std::vector<IVec>& normals = pc.semigroup().hyperplanes().normals;
    Rat qn(n);

    // Scene bounds: the box around n*P, padded by one lattice unit.
    Rat xlo = pc.box_lo()[0] * qn - 1, xhi = pc.box_hi()[0] * qn + 1;
    Rat ylo = pc.box_lo()[1] * qn - 1, yhi = pc.box_hi()[1] * qn + 1;
    double w = to_d(xhi - xlo), h = to_d(yhi - ylo);
    Layout ly{to_d(xlo), to_d(yhi), 600.0 / std::max(w, h), 30.0};
    double W = 2 * ly.margin + w * ly.scale, H = 2 * ly.margin + h * ly.scale;

    Int marks = (rat_floor(xhi) - rat_ceil(xlo) + 1) * (rat_floor(yhi) - rat_ceil(ylo) + 1);
    if (marks > 1000000)
        throw InfeasibleError("SVG at n = " + to_string(n) +
                              " would scan over 10^6 lattice points; reduce the dilation");

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(W) + "\" height=\"" +
           fmt(H) + "\" viewBox=\"0 0 " + fmt(W) + " " + fmt(H) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // Cells of the integer arrangement, scaled by n, colored by class.
    if (classes) {
        size_t k = 0;
        for (const ConicClass& cls : *classes) {
            const char* color = kPalette[k % (sizeof kPalette / sizeof *kPalette)];
            for (const ArrangementCell& cell : cls.members) {
                Rat c0(cell.label[0]), c1(cell.label[1]);
                Rat corners[4][2] = {{c0 - 1, c1 - 1}, {c0, c1 - 1}, {c0, c1}, {c0 - 1, c1}};
                std::string pts;
                for (auto& s : corners) {
                    QVec x = sigma_inverse(normals, s[0] * qn, s[1] * qn);
                    if (!pts.empty()) pts += " ";
                    pts += fmt(ly.px(to_d(x[0]))) + "," + fmt(ly.py(to_d(x[1])));
                }
                svg += "<polygon class=\"cell class-" + std::to_string(k) + "\" points=\"" + pts +
                       "\" fill=\"" + color + "\" fill-opacity=\"0.35\" stroke=\"" + color +
                       "\" stroke-width=\"0.5\"/>\n";
            }
            ++k;
        }
    }

    // Staircase: boundary of the union of shifted cones, a monotone polyline
    // in sigma coordinates through the minimal shift corners.
    {
        std::vector<std::pair<Rat, Rat>> corners;
        for (const IVec& s : pc.shift_sigma()) corners.emplace_back(Rat(s[0]) * qn, Rat(s[1]) * qn);
        std::sort(corners.begin(), corners.end());
        std::vector<std::pair<Rat, Rat>> frontier;
        for (const auto& c : corners)
            if (frontier.empty() || c.second < frontier.back().second) frontier.push_back(c);

        Rat stop = 0, sright = 0;  // sigma values safely past the scene corners
        Rat bx[2] = {xlo, xhi}, by[2] = {ylo, yhi};
        for (const Rat& cx : bx)
            for (const Rat& cy : by) {
                Rat s1 = Rat(normals[1][0]) * cx + Rat(normals[1][1]) * cy;
                Rat s0 = Rat(normals[0][0]) * cx + Rat(normals[0][1]) * cy;
                if (s1 > stop) stop = s1;
                if (s0 > sright) sright = s0;
            }
        stop += 1;
        sright += 1;

        std::vector<std::pair<Rat, Rat>> path;
        path.emplace_back(frontier.front().first, stop);
        for (size_t i = 0; i < frontier.size(); ++i) {
            if (i) path.emplace_back(frontier[i].first, frontier[i - 1].second);
            path.push_back(frontier[i]);
        }
        path.emplace_back(sright, frontier.back().second);

        std::string d;
        for (size_t i = 0; i < path.size(); ++i) {
            QVec x = sigma_inverse(normals, path[i].first, path[i].second);
            d += (i ? " L " : "M ") + fmt(ly.px(to_d(x[0]))) + " " + fmt(ly.py(to_d(x[1])));
        }
        svg += "<path class=\"staircase\" d=\"" + d +
               "\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2\"/>\n";
    }

    // Cone edges from the origin along the extreme rays, clipped to the box.
    for (const IVec& r : pc.semigroup().extreme_rays()) {
        double rx = r[0].convert_to<double>(), ry = r[1].convert_to<double>();
        double t = 1e300;
        if (rx > 0) t = std::min(t, to_d(xhi) / rx);
        if (rx < 0) t = std::min(t, to_d(xlo) / rx);
        if (ry > 0) t = std::min(t, to_d(yhi) / ry);
        if (ry < 0) t = std::min(t, to_d(ylo) / ry);
        if (t < 0 || t > 1e299) t = 0;
        svg += "<line class=\"cone-edge\" x1=\"" + fmt(ly.px(0)) + "\" y1=\"" + fmt(ly.py(0)) +
               "\" x2=\"" + fmt(ly.px(t * rx)) + "\" y2=\"" + fmt(ly.py(t * ry)) +
               "\" stroke=\"#2c3e50\" stroke-width=\"2\"/>\n";
    }

    // One marker per lattice point of n*P.
    for (Int ix = rat_ceil(xlo); ix <= rat_floor(xhi); ++ix)
        for (Int iy = rat_ceil(ylo); iy <= rat_floor(yhi); ++iy)
            if (pc.member(IVec{ix, iy}, n))
                svg += "<circle class=\"lattice-point\" cx=\"" +
                       fmt(ly.px(ix.convert_to<double>())) + "\" cy=\"" +
                       fmt(ly.py(iy.convert_to<double>())) +
                       "\" r=\"3.5\" fill=\"#1a1a1a\"/>\n";

    svg += "</svg>\n";
    return svg;
}

}  // namespace hk
