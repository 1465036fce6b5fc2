#pragma once

// Exact planar convex geometry over rationals: hulls, Minkowski sums, polar
// duals and support values. Polygons are counterclockwise, strictly convex
// (no three collinear vertices kept) and canonically rotated to start at the
// lexicographically smallest vertex, so equal sets compare equal as lists.
// One or two vertices encode a point or a segment.

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "tnorm/errors.hpp"
#include "tnorm/fraction.hpp"

namespace tnorm {

struct RationalPoint {
    Fraction x;
    Fraction y;

    friend bool operator==(const RationalPoint& a, const RationalPoint& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const RationalPoint& a, const RationalPoint& b) { return !(a == b); }
};

inline RationalPoint operator+(const RationalPoint& a, const RationalPoint& b) {
    return {a.x + b.x, a.y + b.y};
}
inline RationalPoint operator-(const RationalPoint& a, const RationalPoint& b) {
    return {a.x - b.x, a.y - b.y};
}
inline RationalPoint operator-(const RationalPoint& a) { return {-a.x, -a.y}; }

inline Fraction cross(const RationalPoint& a, const RationalPoint& b) {
    return a.x * b.y - a.y * b.x;
}
inline Fraction dot(const RationalPoint& a, const RationalPoint& b) {
    return a.x * b.x + a.y * b.y;
}

inline bool lex_less(const RationalPoint& a, const RationalPoint& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

struct ConvexPolygon {
    std::vector<RationalPoint> verts;

    bool is_point() const { return verts.size() == 1; }
    bool is_segment() const { return verts.size() == 2; }

    friend bool operator==(const ConvexPolygon& a, const ConvexPolygon& b) {
        return a.verts == b.verts;
    }
    friend bool operator!=(const ConvexPolygon& a, const ConvexPolygon& b) { return !(a == b); }
};

namespace polygon_detail {

inline ConvexPolygon canonical_rotation(std::vector<RationalPoint> verts) {
    if (verts.size() > 1) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < verts.size(); ++i) {
            if (lex_less(verts[i], verts[best])) best = i;
        }
        std::rotate(verts.begin(), verts.begin() + static_cast<std::ptrdiff_t>(best),
                    verts.end());
    }
    return ConvexPolygon{std::move(verts)};
}

} // namespace polygon_detail

// Monotone-chain hull. Collinear points are dropped, so the result is
// strictly convex; 1 and 2 surviving vertices mean point and segment.
inline ConvexPolygon convex_hull(std::vector<RationalPoint> pts) {
    if (pts.empty()) throw DomainError("convex hull of nothing");
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return ConvexPolygon{std::move(pts)}; // already canonical

    std::vector<RationalPoint> hull;
    // lower chain, then upper chain; strict right turns only
    for (int pass = 0; pass < 2; ++pass) {
        std::size_t base = hull.size();
        for (const RationalPoint& p : pts) {
            while (hull.size() >= base + 2 &&
                   cross(hull.back() - hull[hull.size() - 2], p - hull.back()) <= Fraction(0)) {
                hull.pop_back();
            }
            hull.push_back(p);
        }
        hull.pop_back(); // endpoint repeats as the next chain's start
        std::reverse(pts.begin(), pts.end());
    }
    if (hull.size() == 2 && hull[0] == hull[1]) hull.pop_back();
    // collinear input collapses to its extreme points
    if (hull.size() < 2) {
        return polygon_detail::canonical_rotation({pts.front(), pts.back()});
    }
    return polygon_detail::canonical_rotation(std::move(hull));
}

// Minkowski sum by merging edge fans. Degenerate operands (points, segments)
// go through the pairwise-sum hull, which is exact and small.
inline ConvexPolygon minkowski_sum(const ConvexPolygon& a, const ConvexPolygon& b) {
    if (a.verts.empty() || b.verts.empty()) throw DomainError("Minkowski sum of nothing");
    if (a.verts.size() <= 2 || b.verts.size() <= 2) {
        std::vector<RationalPoint> sums;
        sums.reserve(a.verts.size() * b.verts.size());
        for (const auto& p : a.verts) {
            for (const auto& q : b.verts) sums.push_back(p + q);
        }
        return convex_hull(std::move(sums));
    }

    // Reorder each polygon to start at its bottom-most (then left-most)
    // vertex so both edge fans sweep angles in [0, 2*pi) monotonically.
    auto bottom_start = [](const ConvexPolygon& poly) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < poly.verts.size(); ++i) {
            const auto& v = poly.verts[i];
            const auto& w = poly.verts[best];
            if (v.y < w.y || (v.y == w.y && v.x < w.x)) best = i;
        }
        std::vector<RationalPoint> out(poly.verts.begin() + static_cast<std::ptrdiff_t>(best),
                                       poly.verts.end());
        out.insert(out.end(), poly.verts.begin(),
                   poly.verts.begin() + static_cast<std::ptrdiff_t>(best));
        return out;
    };
    std::vector<RationalPoint> pa = bottom_start(a);
    std::vector<RationalPoint> pb = bottom_start(b);
    const std::size_t n = pa.size(), m = pb.size();

    // Angle order for edge vectors with angles in [0, 2*pi): compare by
    // half-plane first (upper: y > 0, or y == 0 and x > 0), then by cross.
    auto half = [](const RationalPoint& e) {
        return (e.y > Fraction(0) || (e.y == Fraction(0) && e.x > Fraction(0))) ? 0 : 1;
    };
    auto angle_less = [&](const RationalPoint& e, const RationalPoint& f) {
        if (half(e) != half(f)) return half(e) < half(f);
        return cross(e, f) > Fraction(0);
    };

    std::vector<RationalPoint> out;
    out.reserve(n + m);
    RationalPoint cur = pa[0] + pb[0];
    std::size_t i = 0, j = 0;
    while (i < n || j < m) {
        out.push_back(cur);
        if (i >= n) {
            cur = cur + (pb[(j + 1) % m] - pb[j]);
            ++j;
        } else if (j >= m) {
            cur = cur + (pa[(i + 1) % n] - pa[i]);
            ++i;
        } else {
            RationalPoint ea = pa[(i + 1) % n] - pa[i];
            RationalPoint eb = pb[(j + 1) % m] - pb[j];
            if (cross(ea, eb) == Fraction(0) && half(ea) == half(eb)) {
                cur = cur + ea + eb; // parallel edges fuse into one
                ++i;
                ++j;
            } else if (angle_less(ea, eb)) {
                cur = cur + ea;
                ++i;
            } else {
                cur = cur + eb;
                ++j;
            }
        }
    }
    return convex_hull(std::move(out)); // canonicalizes; also guards the merge
}

// Polar duals. A bounded symmetric shape dualizes to a bounded shape; the
// degenerate ones trade places: plane <-> origin point, strip <-> segment.
struct PolarShape {
    enum class Kind { bounded, strip, plane, point } kind = Kind::bounded;
    ConvexPolygon poly;         // bounded: the dual polygon; point: {origin}
    RationalPoint strip_normal; // strip: { phi : |<normal, phi>| <= width }
    Fraction strip_width;

    friend bool operator==(const PolarShape& a, const PolarShape& b) {
        if (a.kind != b.kind) return false;
        switch (a.kind) {
            case Kind::bounded: return a.poly == b.poly;
            case Kind::strip:
                return a.strip_normal == b.strip_normal && a.strip_width == b.strip_width;
            default: return true;
        }
    }
};

namespace polygon_detail {

// Scale a rational direction to its primitive integer vector in the closed
// upper half plane; returns the scale c with input = c * primitive.
inline std::pair<RationalPoint, Fraction> primitive_direction(const RationalPoint& v) {
    if (v.x.is_zero() && v.y.is_zero()) throw InternalError("primitive_direction of zero");
    Int a = v.x.num() * v.y.den();
    Int b = v.y.num() * v.x.den();
    Int g = int_gcd(a, b);
    a /= g;
    b /= g;
    if (b < 0 || (b == 0 && a < 0)) {
        a = -a;
        b = -b;
    }
    RationalPoint prim{Fraction(a, Int(1)), Fraction(b, Int(1))};
    Fraction c = (a != 0) ? v.x / prim.x : v.y / prim.y;
    return {prim, c};
}

} // namespace polygon_detail

inline PolarShape polar_dual(const ConvexPolygon& p) {
    const auto& v = p.verts;
    if (v.empty()) throw DomainError("polar dual of nothing");
    PolarShape out;
    if (v.size() == 1) {
        if (!v[0].x.is_zero() || !v[0].y.is_zero()) {
            throw DomainError("polar dual of a point needs the origin");
        }
        out.kind = PolarShape::Kind::plane;
        return out;
    }
    if (v.size() == 2) {
        if (v[0] != -v[1]) {
            throw DomainError("polar dual of a segment needs symmetric endpoints");
        }
        auto [prim, scale] = polygon_detail::primitive_direction(v[1]);
        Fraction c = scale.abs();
        out.kind = PolarShape::Kind::strip;
        out.strip_normal = prim;
        out.strip_width = Fraction(1) / c; // dual of [-s, s] is |<s, phi>| <= 1
        return out;
    }

    // One dual vertex per edge: the intersection of the two support lines
    // <v_i, phi> = 1 and <v_{i+1}, phi> = 1. Positive cross products certify
    // the origin is interior, otherwise the dual is unbounded.
    std::vector<RationalPoint> dual;
    dual.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const RationalPoint& p0 = v[i];
        const RationalPoint& p1 = v[(i + 1) % v.size()];
        Fraction d = cross(p0, p1);
        if (!(d > Fraction(0))) {
            throw DomainError("polar dual needs the origin strictly inside");
        }
        dual.push_back(RationalPoint{(p1.y - p0.y) / d, (p0.x - p1.x) / d});
    }
    out.kind = PolarShape::Kind::bounded;
    out.poly = polygon_detail::canonical_rotation(std::move(dual));
    return out;
}

inline PolarShape polar_dual(const PolarShape& s) {
    PolarShape out;
    switch (s.kind) {
        case PolarShape::Kind::bounded:
            return polar_dual(s.poly);
        case PolarShape::Kind::plane:
            out.kind = PolarShape::Kind::point;
            out.poly.verts = {RationalPoint{Fraction(0), Fraction(0)}};
            return out;
        case PolarShape::Kind::point:
            if (s.poly.verts.size() != 1 || !s.poly.verts[0].x.is_zero() ||
                !s.poly.verts[0].y.is_zero()) {
                throw DomainError("polar dual of a point needs the origin");
            }
            out.kind = PolarShape::Kind::plane;
            return out;
        case PolarShape::Kind::strip: {
            // dual of { |<n, phi>| <= w } is the segment [-n/w, n/w]
            const RationalPoint& n = s.strip_normal;
            RationalPoint end{n.x / s.strip_width, n.y / s.strip_width};
            std::vector<RationalPoint> seg = {end, -end};
            return PolarShape{PolarShape::Kind::bounded,
                              polygon_detail::canonical_rotation(std::move(seg)),
                              RationalPoint{}, Fraction(0)};
        }
    }
    throw InternalError("unhandled polar shape");
}

// Largest value of <v, .> over the shape. Unbounded shapes report +infinity
// as std::nullopt unless v is orthogonal to every unbounded direction.
inline Fraction support_value(const ConvexPolygon& p, const RationalPoint& v) {
    if (p.verts.empty()) throw DomainError("support of nothing");
    Fraction best = dot(v, p.verts[0]);
    for (std::size_t i = 1; i < p.verts.size(); ++i) {
        Fraction cand = dot(v, p.verts[i]);
        if (cand > best) best = cand;
    }
    return best;
}

inline std::optional<Fraction> support_value(const PolarShape& s, const RationalPoint& v) {
    switch (s.kind) {
        case PolarShape::Kind::bounded:
        case PolarShape::Kind::point:
            return support_value(s.poly, v);
        case PolarShape::Kind::plane:
            if (v.x.is_zero() && v.y.is_zero()) return Fraction(0);
            return std::nullopt;
        case PolarShape::Kind::strip: {
            if (v.x.is_zero() && v.y.is_zero()) return Fraction(0);
            if (cross(v, s.strip_normal) != Fraction(0)) return std::nullopt;
            // v = t * normal, support is |t| * width
            const RationalPoint& n = s.strip_normal;
            Fraction t = n.x.is_zero() ? v.y / n.y : v.x / n.x;
            return t.abs() * s.strip_width;
        }
    }
    throw InternalError("unhandled polar shape");
}

} // namespace tnorm
