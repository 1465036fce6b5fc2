#pragma once

// Independent oracles and enumerators for the test suite. Everything here is
// deliberately written from scratch against the plat picture rather than by
// calling the library's own shortcuts, so agreement is evidence and not
// tautology.

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "tnorm/diagram.hpp"
#include "tnorm/fraction.hpp"
#include "tnorm/polygon.hpp"
#include "tnorm/satellite.hpp"
#include "tnorm/thurston_ball.hpp"

namespace oracles {

using tnorm::ConvexPolygon;
using tnorm::Fraction;
using tnorm::Int;
using tnorm::IVec;
using tnorm::NormBall;
using tnorm::RationalDiagram;
using tnorm::RationalPoint;

// Linking number by summing per-crossing signs from strand velocities, the
// textbook recipe: walk the four plat strands left to right, and at every
// crossing take the sign of the cross product of the over-strand velocity
// with the under-strand velocity (y up, x along the braid). Odd-numbered
// boxes put the strand entering from the upper row on top, even-numbered
// boxes the lower one; mirroring swaps every crossing.
inline long long gauss_linking_number(const RationalDiagram& d) {
    const auto& labels = d.boxes.coeffs;

    // final permutation of rows: strands swap rows once per crossing parity
    int rows[4] = {0, 1, 2, 3};
    {
        int r = 1;
        for (std::size_t j = 0; j < labels.size(); ++j) {
            if (labels[j] % 2 != 0) std::swap(rows[r], rows[r + 1]);
            r = (r == 1) ? 2 : 1;
        }
    }

    // closure caps: (0,1),(2,3) on the left; on the right the pairing
    // depends on whether the last box sits on the upper or lower row pair
    std::vector<std::pair<int, int>> caps = {{0, 1}, {2, 3}};
    if (labels.size() % 2 != 0) {
        caps.push_back({rows[0], rows[1]});
        caps.push_back({rows[2], rows[3]});
    } else {
        caps.push_back({rows[1], rows[2]});
        caps.push_back({rows[0], rows[3]});
    }

    // components: union-find over the cap graph
    int comp[4] = {0, 1, 2, 3};
    auto find = [&](int a) {
        while (comp[a] != a) a = comp[a] = comp[comp[a]];
        return a;
    };
    for (auto [a, b] : caps) comp[find(a)] = find(b);
    int classes = 0;
    for (int s = 0; s < 4; ++s) classes += (find(s) == s);
    if (classes != 2) throw std::runtime_error("gauss oracle: not a 2-component link");

    // directions: every cap is a u-turn, so it joins strands of opposite
    // horizontal direction; seed each component's lowest strand with +1
    int dir[4] = {0, 0, 0, 0};
    for (int seed = 0; seed < 4; ++seed) {
        if (dir[seed] != 0) continue;
        dir[seed] = 1;
        for (bool changed = true; changed;) {
            changed = false;
            for (auto [a, b] : caps) {
                if (dir[a] != 0 && dir[b] == 0) { dir[b] = -dir[a]; changed = true; }
                if (dir[b] != 0 && dir[a] == 0) { dir[a] = -dir[b]; changed = true; }
                if (dir[a] != 0 && dir[a] == dir[b]) {
                    throw std::runtime_error("gauss oracle: inconsistent orientations");
                }
            }
        }
    }

    // crossing-by-crossing walk
    long long signed_sum = 0;
    int occupant[4] = {0, 1, 2, 3};
    int r = 1;
    for (std::size_t j = 0; j < labels.size(); ++j) {
        for (long long t = 0; t < labels[j]; ++t) {
            int upper = occupant[r];
            int lower = occupant[r + 1];
            // velocities: the upper strand heads down into the box, the
            // lower one up; both flip with the strand's direction
            long long vx_u = dir[upper], vy_u = -dir[upper];
            long long vx_l = dir[lower], vy_l = dir[lower];
            bool upper_over = (j % 2 == 0); // boxes are 1-based in the text
            if (d.mirror) upper_over = !upper_over;
            long long cross_sign = upper_over ? (vx_u * vy_l - vy_u * vx_l)
                                              : (vx_l * vy_u - vy_l * vx_u);
            if (find(upper) != find(lower)) {
                signed_sum += (cross_sign > 0) ? 1 : -1;
            }
            std::swap(occupant[r], occupant[r + 1]);
        }
        r = (r == 1) ? 2 : 1;
    }
    if (signed_sum % 2 != 0) throw std::runtime_error("gauss oracle: odd crossing sum");
    return signed_sum / 2;
}

// All ordered lists of positive integers with total in [1, max_total].
inline std::vector<std::vector<long long>> compositions_up_to(int max_total) {
    std::vector<std::vector<long long>> out;
    std::vector<long long> cur;
    auto rec = [&](auto&& self, int budget) -> void {
        if (!cur.empty()) out.push_back(cur);
        for (int a = 1; a <= budget; ++a) {
            cur.push_back(a);
            self(self, budget - a);
            cur.pop_back();
        }
    };
    rec(rec, max_total);
    return out;
}

// Coefficient lists of base-type diagrams with total at most max_total: a
// single even box, or odd ends with even middles.
inline std::vector<std::vector<long long>> base_type_lists_up_to(int max_total) {
    std::vector<std::vector<long long>> out;
    for (int a = 2; a <= max_total; a += 2) out.push_back({a});
    // grow odd-start prefixes, close with an odd coefficient
    std::vector<long long> cur;
    auto rec = [&](auto&& self, int budget) -> void {
        for (int last = 1; last <= budget; last += 2) {
            cur.push_back(last);
            out.push_back(cur);
            cur.pop_back();
        }
        for (int mid = 2; mid <= budget - 1; mid += 2) {
            cur.push_back(mid);
            self(self, budget - mid);
            cur.pop_back();
        }
    };
    for (int first = 1; first <= max_total - 1; first += 2) {
        cur.push_back(first);
        rec(rec, max_total - first);
        cur.pop_back();
    }
    return out;
}

// Satellite oracle through the dual route: the dual of v -> x(M v) is the
// image of the dual under the transpose of M, and the dual of a sum of
// seminorms is the Minkowski sum of duals. Coordinates only get scaled here
// because both transforms are diagonal.
inline ConvexPolygon scaled_polygon(const ConvexPolygon& p, const Int& sx, const Int& sy) {
    std::vector<RationalPoint> pts;
    pts.reserve(p.verts.size());
    const Fraction fx(sx, Int(1)), fy(sy, Int(1));
    for (const RationalPoint& v : p.verts) pts.push_back({v.x * fx, v.y * fy});
    return tnorm::convex_hull(std::move(pts));
}

inline ConvexPolygon satellite_dual_oracle(const tnorm::SatelliteInput& in) {
    return tnorm::minkowski_sum(scaled_polygon(in.companion.dual, in.lk_pattern, Int(1)),
                                scaled_polygon(in.pattern.dual, Int(1), in.lk_companion));
}

// Finite rays read off a dual polygon: one per edge pair, as the primitive
// outer normal in the upper half plane with its support value.
struct OracleRay {
    IVec dir;
    Fraction value;

    friend bool operator==(const OracleRay& a, const OracleRay& b) {
        return a.dir == b.dir && a.value == b.value;
    }
};

inline std::vector<OracleRay> rays_from_dual(const ConvexPolygon& dual) {
    std::vector<OracleRay> out;
    if (dual.verts.size() < 3) return out;
    for (std::size_t i = 0; i < dual.verts.size(); ++i) {
        const RationalPoint& p0 = dual.verts[i];
        const RationalPoint& p1 = dual.verts[(i + 1) % dual.verts.size()];
        RationalPoint e = p1 - p0;
        // outer normal of a counterclockwise edge
        Fraction nx = e.y, ny = -e.x;
        if (ny < Fraction(0) || (ny == Fraction(0) && nx < Fraction(0))) continue; // antipode
        Int a = nx.num() * ny.den();
        Int b = ny.num() * nx.den();
        Int g = tnorm::int_gcd(a, b);
        IVec dir{a / g, b / g};
        out.push_back(OracleRay{dir, dot(RationalPoint{Fraction(dir.a, Int(1)),
                                                       Fraction(dir.b, Int(1))},
                                         p0)});
    }
    std::sort(out.begin(), out.end(), [](const OracleRay& x, const OracleRay& y) {
        return angle_less(x.dir, y.dir);
    });
    return out;
}

} // namespace oracles
