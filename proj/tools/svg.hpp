#pragma once

// SVG rendering of a norm ball, purely presentational: the primal ball drawn
// in the [-3,3]^2 window. Unbounded regions (plane, strip) are drawn as
// oversized polygons and trimmed by an SVG clipPath; null directions become
// labeled arrows. Coordinates go through doubles, exactness ends here.

#include <cmath>
#include <ostream>
#include <string>

#include "tnorm/fraction.hpp"
#include "tnorm/thurston_ball.hpp"

namespace tnorm_cli {

namespace svg_detail {

inline double to_double(const tnorm::Fraction& f) {
    return f.num().convert_to<double>() / f.den().convert_to<double>();
}

struct Mapper {
    static constexpr double kSpan = 3.0;  // window is [-kSpan, kSpan]^2
    static constexpr double kSize = 640.0;

    double px(double x) const { return (x + kSpan) / (2 * kSpan) * kSize; }
    double py(double y) const { return (kSpan - y) / (2 * kSpan) * kSize; }
};

inline std::string point_attr(const Mapper& m, double x, double y) {
    return std::to_string(m.px(x)) + "," + std::to_string(m.py(y));
}

} // namespace svg_detail

inline void write_svg(std::ostream& os, const tnorm::NormBall& ball) {
    using svg_detail::Mapper;
    using svg_detail::point_attr;
    using svg_detail::to_double;
    const Mapper m;

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
          "viewBox=\"0 0 640 640\">\n";
    os << "  <defs>\n"
          "    <clipPath id=\"viewport\"><rect x=\"0\" y=\"0\" width=\"640\" "
          "height=\"640\"/></clipPath>\n"
          "    <marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" "
          "markerWidth=\"7\" markerHeight=\"7\" orient=\"auto-start-reverse\">"
          "<path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#b2182b\"/></marker>\n"
          "  </defs>\n";
    os << "  <rect x=\"0\" y=\"0\" width=\"640\" height=\"640\" fill=\"white\" "
          "stroke=\"#444\"/>\n";
    os << "  <g clip-path=\"url(#viewport)\">\n";

    // coordinate axes
    os << "    <line x1=\"" << m.px(-m.kSpan) << "\" y1=\"" << m.py(0) << "\" x2=\""
       << m.px(m.kSpan) << "\" y2=\"" << m.py(0)
       << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    os << "    <line x1=\"" << m.px(0) << "\" y1=\"" << m.py(-m.kSpan) << "\" x2=\"" << m.px(0)
       << "\" y2=\"" << m.py(m.kSpan) << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";

    const char* fill = "#2166ac33";
    const char* edge = "#2166ac";
    if (ball.zero) {
        os << "    <rect x=\"0\" y=\"0\" width=\"640\" height=\"640\" fill=\"" << fill
           << "\"/>\n";
    } else if (!ball.null_dirs.empty()) {
        // strip between the lines <phi, v> = +-1; dual is the segment +-phi
        double phix = to_double(ball.dual.verts[0].x);
        double phiy = to_double(ball.dual.verts[0].y);
        double nn = phix * phix + phiy * phiy;
        double p0x = phix / nn, p0y = phiy / nn; // point on the boundary line
        double ux = -phiy, uy = phix;            // line direction
        double len = std::sqrt(ux * ux + uy * uy);
        ux /= len;
        uy /= len;
        const double big = 100.0;
        os << "    <polygon points=\"" << point_attr(m, p0x + big * ux, p0y + big * uy) << " "
           << point_attr(m, p0x - big * ux, p0y - big * uy) << " "
           << point_attr(m, -p0x - big * ux, -p0y - big * uy) << " "
           << point_attr(m, -p0x + big * ux, -p0y + big * uy) << "\" fill=\"" << fill
           << "\" stroke=\"" << edge << "\" stroke-width=\"2\"/>\n";
    } else {
        os << "    <polygon points=\"";
        auto emit_vertex = [&](const tnorm::RayInfo& r, int sign) {
            double x = sign * to_double(tnorm::Fraction(r.dir.a, tnorm::Int(1)) / r.value);
            double y = sign * to_double(tnorm::Fraction(r.dir.b, tnorm::Int(1)) / r.value);
            os << point_attr(m, x, y) << " ";
        };
        for (const tnorm::RayInfo& r : ball.finite_rays) emit_vertex(r, 1);
        for (const tnorm::RayInfo& r : ball.finite_rays) emit_vertex(r, -1);
        os << "\" fill=\"" << fill << "\" stroke=\"" << edge << "\" stroke-width=\"2\"/>\n";
    }

    // vertex dots
    for (const tnorm::RayInfo& r : ball.finite_rays) {
        for (int sign : {1, -1}) {
            double x = sign * to_double(tnorm::Fraction(r.dir.a, tnorm::Int(1)) / r.value);
            double y = sign * to_double(tnorm::Fraction(r.dir.b, tnorm::Int(1)) / r.value);
            os << "    <circle cx=\"" << m.px(x) << "\" cy=\"" << m.py(y)
               << "\" r=\"4\" fill=\"" << edge << "\"/>\n";
        }
    }

    // null directions as labeled arrows through the origin
    for (const tnorm::IVec& w : ball.null_dirs) {
        double wx = w.a.convert_to<double>();
        double wy = w.b.convert_to<double>();
        double len = std::sqrt(wx * wx + wy * wy);
        wx = wx / len * 2.6;
        wy = wy / len * 2.6;
        for (int sign : {1, -1}) {
            os << "    <line x1=\"" << m.px(0) << "\" y1=\"" << m.py(0) << "\" x2=\""
               << m.px(sign * wx) << "\" y2=\"" << m.py(sign * wy)
               << "\" stroke=\"#b2182b\" stroke-width=\"2\" marker-end=\"url(#arrow)\"/>\n";
        }
        os << "    <text x=\"" << m.px(wx * 0.72) + 8 << "\" y=\"" << m.py(wy * 0.72)
           << "\" font-family=\"sans-serif\" font-size=\"15\" fill=\"#b2182b\">null slope "
           << slope_of(w).str() << "</text>\n";
    }

    os << "  </g>\n";
    os << "</svg>\n";
}

} // namespace tnorm_cli
