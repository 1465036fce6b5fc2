#pragma once

// Thurston norm balls on H_2(M, boundary) for 2-bridge link exteriors, as
// dual polygons plus the list of vertex directions ("rays"). The pipeline:
// split the diagram at its self-crossing boxes, add up the base-type piece
// norms with orientation signs, then turn the four vertex norms into a ball.
// The ball builder itself is generic: it takes any candidate direction set
// that provably contains every breakpoint of a piecewise-linear seminorm and
// prunes it down to the true vertices, so the satellite code reuses it.

#include <functional>
#include <string>
#include <vector>

#include "tnorm/base_norms.hpp"
#include "tnorm/diagram.hpp"
#include "tnorm/errors.hpp"
#include "tnorm/fraction.hpp"
#include "tnorm/polygon.hpp"

namespace tnorm {

// Integral homology direction a*l1 + b*l2, kept primitive and in the closed
// upper half plane (b > 0, or b == 0 and a > 0). Its slope is a/b, so the
// l1 axis has slope inf and the l2 axis slope 0.
struct IVec {
    Int a;
    Int b;

    friend bool operator==(const IVec& u, const IVec& v) { return u.a == v.a && u.b == v.b; }
    friend bool operator!=(const IVec& u, const IVec& v) { return !(u == v); }
};

inline IVec canonical_direction(Int a, Int b) {
    if (a == 0 && b == 0) throw InternalError("zero direction");
    Int g = int_gcd(a, b);
    a /= g;
    b /= g;
    if (b < 0 || (b == 0 && a < 0)) {
        a = -a;
        b = -b;
    }
    return IVec{a, b};
}

inline Fraction slope_of(const IVec& d) { return Fraction(d.a, d.b); }

// angle order on the closed upper half plane, from (1,0) toward (-1,0)
inline bool angle_less(const IVec& u, const IVec& v) {
    return u.a * v.b - u.b * v.a > 0;
}

// Norm of a*l1 + b*l2 from the four vertex norms. On each of the eight
// sectors cut out by the axes and the bisectors the norm is the obvious
// cut-and-paste combination of the two bounding classes; for a >= b >= 0
// that reads (a-b)*x(l1) + b*x(l1+l2), and symmetrically elsewhere.
inline Fraction sector_evaluate(const VertexNorms& n, Fraction a, Fraction b) {
    const Fraction zero(0);
    if (b < zero || (b == zero && a < zero)) {
        a = -a;
        b = -b;
    }
    const Fraction x10(n.x10, Int(1)), x01(n.x01, Int(1));
    const Fraction x11(n.x11, Int(1)), x1m1(n.x1m1, Int(1));
    if (b == zero) return a * x10;
    if (a == zero) return b * x01;
    if (a > zero) {
        if (a >= b) return (a - b) * x10 + b * x11;
        return (b - a) * x01 + a * x11;
    }
    Fraction c = -a;
    if (c >= b) return (c - b) * x10 + b * x1m1;
    return (b - c) * x01 + c * x1m1;
}

// Vertex norms of an arbitrary 2-component diagram: cut at the r self-boxes,
// evaluate each base-type piece at (1, +-1) according to the accumulated
// orientation sign, and pay r for l1 and 2r for the mixed classes. The
// mirror flag swaps the two mixed classes at the end.
inline VertexNorms vertex_norms(const RationalDiagram& d) {
    SplitResult split = split_diagram(d);
    const Int r = static_cast<long long>(split.self_boxes.size());
    VertexNorms total{0, 0, 0, 0};
    for (std::size_t j = 0; j < split.pieces.size(); ++j) {
        const RationalDiagram& piece = split.pieces[j];
        if (!piece.empty() && !is_base_type(piece)) {
            throw InternalError("split produced a piece that is not base-type");
        }
        VertexNorms pn = base_vertex_norms(piece);
        total.x10 += pn.x10;
        if (split.signs[j] > 0) {
            total.x11 += pn.x11;
            total.x1m1 += pn.x1m1;
        } else {
            total.x11 += pn.x1m1;
            total.x1m1 += pn.x11;
        }
    }
    total.x10 += r;
    total.x01 = total.x10;
    total.x11 += 2 * r;
    total.x1m1 += 2 * r;
    if (d.mirror) std::swap(total.x11, total.x1m1);
    return total;
}

inline VertexNorms vertex_norms(const Fraction& f) {
    return vertex_norms(RationalDiagram::from_fraction(f));
}

// A norm ball. zero means the seminorm vanishes identically (the "ball" is
// the whole plane). One null direction means a strip: two faces, no finite
// vertices. Otherwise finite_rays lists the vertex directions with their
// norms, in angle order. dual is always a bounded polygon (a point for the
// zero seminorm, a segment for a strip) and evaluation is support on dual.
struct RayInfo {
    IVec dir;
    Fraction value;
};

struct NormBall {
    bool zero = false;
    std::vector<RayInfo> finite_rays;
    std::vector<IVec> null_dirs;
    ConvexPolygon dual;
};

using SeminormFn = std::function<Fraction(const Int&, const Int&)>;

// Build the ball of a piecewise-linear seminorm given a candidate direction
// set that is guaranteed to contain every breakpoint. The candidates are
// pruned by the additivity test (x(u+w) = x(u) + x(w) across a direction
// means no breakpoint there), which is exact under the superset guarantee;
// the final pass re-checks additivity between surviving neighbours, so a
// violated guarantee surfaces as InternalError instead of a wrong ball.
inline NormBall ball_from_breakpoint_candidates(const std::vector<IVec>& candidates,
                                                const SeminormFn& x) {
    std::vector<IVec> dirs;
    for (const IVec& d : candidates) {
        IVec c = canonical_direction(d.a, d.b);
        bool dup = false;
        for (const IVec& e : dirs) dup = dup || e == c;
        if (!dup) dirs.push_back(c);
    }
    std::sort(dirs.begin(), dirs.end(), angle_less);

    std::vector<Fraction> values;
    values.reserve(dirs.size());
    std::vector<IVec> nulls;
    bool any_positive = false;
    for (const IVec& d : dirs) {
        Fraction v = x(d.a, d.b);
        if (v < Fraction(0)) throw InternalError("seminorm evaluated negative");
        if (v.is_zero()) nulls.push_back(d);
        else any_positive = true;
        values.push_back(v);
    }

    NormBall ball;

    if (nulls.size() >= 2 || dirs.empty() || !any_positive) {
        // Two independent null directions force the seminorm to vanish.
        if (any_positive) throw InternalError("null plane with a positive candidate");
        if (!x(1, 0).is_zero() || !x(0, 1).is_zero() || !x(1, 1).is_zero()) {
            throw InternalError("candidate set too small: seminorm is not zero");
        }
        ball.zero = true;
        ball.dual.verts = {RationalPoint{Fraction(0), Fraction(0)}};
        return ball;
    }

    if (nulls.size() == 1) {
        // Strip: the seminorm factors through the quotient by the null line,
        // so x(v) = |<phi, v>| for the phi orthogonal to the null direction.
        const IVec& w = nulls[0];
        Int pa = -w.b, pb = w.a;
        Fraction transverse = x(pa, pb);
        if (transverse.is_zero()) throw InternalError("strip with vanishing transverse norm");
        Fraction s = transverse / Fraction(w.a * w.a + w.b * w.b, Int(1));
        RationalPoint phi{Fraction(pa, Int(1)) * s, Fraction(pb, Int(1)) * s};
        for (std::size_t i = 0; i < dirs.size(); ++i) {
            Fraction predicted =
                dot(phi, RationalPoint{Fraction(dirs[i].a, Int(1)), Fraction(dirs[i].b, Int(1))})
                    .abs();
            if (predicted != values[i]) {
                throw InternalError("strip candidates are inconsistent with the null direction");
            }
        }
        ball.null_dirs = {w};
        ball.dual = polygon_detail::canonical_rotation({phi, -phi});
        return ball;
    }

    // Bounded ball. Keep a direction exactly when the seminorm bends there.
    const std::size_t m = dirs.size();
    if (m < 2) throw InternalError("bounded seminorm needs at least two breakpoint pairs");
    auto eval_sum = [&](const IVec& u, const IVec& w) { return x(u.a + w.a, u.b + w.b); };
    std::vector<IVec> kept;
    std::vector<Fraction> kept_values;
    for (std::size_t i = 0; i < m; ++i) {
        IVec u = (i > 0) ? dirs[i - 1] : IVec{-dirs[m - 1].a, -dirs[m - 1].b};
        IVec w = (i + 1 < m) ? dirs[i + 1] : IVec{-dirs[0].a, -dirs[0].b};
        if (eval_sum(u, w) != x(u.a, u.b) + x(w.a, w.b)) {
            kept.push_back(dirs[i]);
            kept_values.push_back(values[i]);
        }
    }
    if (kept.size() < 2) throw InternalError("pruning left fewer than two vertex directions");

    // Verify the superset guarantee: between consecutive vertices (wrapping
    // through the antipode) the seminorm must be exactly additive.
    for (std::size_t i = 0; i < kept.size(); ++i) {
        IVec u = kept[i];
        IVec w = (i + 1 < kept.size()) ? kept[i + 1] : IVec{-kept[0].a, -kept[0].b};
        if (eval_sum(u, w) != x(u.a, u.b) + x(w.a, w.b)) {
            throw InternalError("a breakpoint is missing from the candidate set");
        }
    }

    std::vector<RationalPoint> verts;
    verts.reserve(2 * kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i) {
        verts.push_back(RationalPoint{Fraction(kept[i].a, Int(1)) / kept_values[i],
                                      Fraction(kept[i].b, Int(1)) / kept_values[i]});
    }
    for (std::size_t i = 0; i < kept.size(); ++i) verts.push_back(-verts[i]);

    PolarShape dual = polar_dual(polygon_detail::canonical_rotation(std::move(verts)));
    if (dual.kind != PolarShape::Kind::bounded) {
        throw InternalError("dual of a bounded ball came out unbounded");
    }
    ball.dual = dual.poly;
    for (std::size_t i = 0; i < kept.size(); ++i) {
        ball.finite_rays.push_back(RayInfo{kept[i], kept_values[i]});
    }
    return ball;
}

// Seminorm preconditions on four vertex norms: nonnegative, and convex
// across each of the four candidate directions.
inline void validate_vertex_norms(const VertexNorms& v) {
    if (v.x10 < 0 || v.x01 < 0 || v.x11 < 0 || v.x1m1 < 0) {
        throw DomainError("vertex norms must be nonnegative");
    }
    if (v.x11 + v.x1m1 < 2 * v.x10 || v.x11 + v.x1m1 < 2 * v.x01 ||
        v.x10 + v.x01 < v.x11 || v.x10 + v.x01 < v.x1m1) {
        throw DomainError("vertex norms are not the breakpoint values of a seminorm");
    }
}

inline NormBall build_ball(const VertexNorms& v) {
    validate_vertex_norms(v);
    std::vector<IVec> candidates = {IVec{1, 0}, IVec{0, 1}, IVec{1, 1}, IVec{1, -1}};
    SeminormFn x = [&v](const Int& a, const Int& b) {
        return sector_evaluate(v, Fraction(a, Int(1)), Fraction(b, Int(1)));
    };
    return ball_from_breakpoint_candidates(candidates, x);
}

inline NormBall build_ball(const RationalDiagram& d) { return build_ball(vertex_norms(d)); }
inline NormBall build_ball(const Fraction& f) { return build_ball(vertex_norms(f)); }

inline Fraction evaluate(const NormBall& ball, const Fraction& a, const Fraction& b) {
    return support_value(ball.dual, RationalPoint{a, b});
}

// Slopes of the ball's rays: vertex directions plus null directions, finite
// slopes ascending and then inf. The zero seminorm has no rays.
inline std::vector<Fraction> rays_of(const NormBall& ball) {
    std::vector<Fraction> rays;
    for (const RayInfo& r : ball.finite_rays) rays.push_back(slope_of(r.dir));
    for (const IVec& w : ball.null_dirs) rays.push_back(slope_of(w));
    std::sort(rays.begin(), rays.end());
    return rays;
}

inline int face_count(const NormBall& ball) {
    if (ball.zero) return 0;
    return static_cast<int>(2 * (ball.finite_rays.size() + ball.null_dirs.size()));
}

inline std::string shape_of(const NormBall& ball) {
    if (ball.zero) return "plane";
    if (!ball.null_dirs.empty()) return "strip";
    const auto& rays = ball.finite_rays;
    if (rays.size() == 2) {
        if (rays[0].dir == IVec{1, 0} && rays[1].dir == IVec{0, 1}) return "quadrilateral-axes";
        if (rays[0].dir == IVec{1, 1} && rays[1].dir == IVec{-1, 1}) {
            return "quadrilateral-bisectors";
        }
        return "quadrilateral";
    }
    if (rays.size() == 3) return "hexagon";
    if (rays.size() == 4) return "octagon";
    return std::to_string(2 * rays.size()) + "-gon";
}

struct BallClassification {
    bool base_type = false;
    bool fibers_S10 = false;
    std::vector<Fraction> rays;
    int faces = 0;
    std::string shape;
};

namespace ball_detail {

inline bool rays_subset(const std::vector<Fraction>& rays, const std::vector<Fraction>& allowed) {
    for (const Fraction& r : rays) {
        bool ok = false;
        for (const Fraction& s : allowed) ok = ok || r == s;
        if (!ok) return false;
    }
    return true;
}

} // namespace ball_detail

// Classify a diagram's ball and cross-check the ray pattern against the
// piece decomposition: rays inside {0,-1,inf} exactly when every piece
// matches its accumulated orientation sign (plus-type on +, minus-type on -),
// rays inside {0,1,inf} for the opposite matching, rays inside {0,inf}
// exactly when every piece is T(2) or T(1,1), and rays inside {1,-1} exactly
// for base-type diagrams. Any disagreement is an internal error.
inline BallClassification classify(const RationalDiagram& d) {
    BallClassification out;
    NormBall ball = build_ball(d);
    out.rays = rays_of(ball);
    out.faces = face_count(ball);
    out.shape = shape_of(ball);
    out.base_type = is_base_type(d);
    out.fibers_S10 = out.base_type;

    SplitResult split = split_diagram(d);
    auto piece_matches = [&](std::size_t j, int wanted_sign) {
        PmType t = pm_type(base_vertex_norms(split.pieces[j]));
        if (t == PmType::both) return true;
        return wanted_sign > 0 ? t == PmType::plus : t == PmType::minus;
    };
    bool straight = true, crossed = true; // piece type == sigma  /  == -sigma
    for (std::size_t j = 0; j < split.pieces.size(); ++j) {
        straight = straight && piece_matches(j, split.signs[j]);
        crossed = crossed && piece_matches(j, -split.signs[j]);
    }
    bool tiny = true; // every piece T(2) or T(1,1)
    for (const RationalDiagram& piece : split.pieces) {
        const auto& c = piece.boxes.coeffs;
        tiny = tiny && (c.empty() || c == std::vector<long long>{2} ||
                        c == std::vector<long long>{1, 1});
    }

    const Fraction inf = Fraction::infinity();
    bool in_0m1 = ball_detail::rays_subset(out.rays, {Fraction(0), Fraction(-1), inf});
    bool in_0p1 = ball_detail::rays_subset(out.rays, {Fraction(0), Fraction(1), inf});
    bool in_axes = ball_detail::rays_subset(out.rays, {Fraction(0), inf});
    bool in_bis = ball_detail::rays_subset(out.rays, {Fraction(1), Fraction(-1)});

    // the mirror flag reflects the ball across the slope-0/inf axes
    bool predict_0m1 = d.mirror ? crossed : straight;
    bool predict_0p1 = d.mirror ? straight : crossed;
    if (predict_0m1 != in_0m1 || predict_0p1 != in_0p1 || tiny != in_axes ||
        out.base_type != in_bis) {
        throw InternalError("ray pattern disagrees with the piece decomposition");
    }
    return out;
}

inline BallClassification classify(const Fraction& f) {
    return classify(RationalDiagram::from_fraction(f));
}

} // namespace tnorm
