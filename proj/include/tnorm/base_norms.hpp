#pragma once

// Closed-form vertex norms for base-type diagrams. For these diagrams the
// four classes l1, l2, l1+l2, l1-l2 span the whole picture: every other class
// is resolved by cutting and pasting copies of their standard surfaces, which
// is what the sector formula in thurston_ball.hpp encodes.

#include "tnorm/diagram.hpp"
#include "tnorm/errors.hpp"
#include "tnorm/fraction.hpp"

namespace tnorm {

// Norms of the four distinguished classes. x10 = x(l1), x01 = x(l2),
// x11 = x(l1+l2), x1m1 = x(l1-l2), all with respect to the orientation the
// diagram carries. Always x10 == x01 for honest diagrams; the struct keeps
// both slots because evaluation treats the axes independently.
struct VertexNorms {
    Int x10;
    Int x01;
    Int x11;
    Int x1m1;

    friend bool operator==(const VertexNorms& a, const VertexNorms& b) {
        return a.x10 == b.x10 && a.x01 == b.x01 && a.x11 == b.x11 && a.x1m1 == b.x1m1;
    }
    friend bool operator!=(const VertexNorms& a, const VertexNorms& b) { return !(a == b); }
};

// Vertex norms of a base-type diagram (or the empty tangle, which contributes
// nothing). With s = sum of the coefficients:
//   x10 = x01 = s/2 - 1
//   k odd:  x11 = sum over even positions, x1m1 = sum over odd positions - 2
//   k even: x11 = sum over even positions - 1, x1m1 = sum over odd positions - 1
// The two always satisfy x11 + x1m1 = 2*x10; negative intermediate values
// would mean a non-base-type input and are treated as a caller error.
inline VertexNorms base_vertex_norms(const RationalDiagram& d) {
    if (d.empty()) return VertexNorms{0, 0, 0, 0};
    if (!is_base_type(d)) throw DomainError("base_vertex_norms needs a base-type diagram");

    const auto& a = d.boxes.coeffs;
    Int total = 0, odd_pos = 0, even_pos = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        total += a[i];
        ((i % 2 == 0) ? odd_pos : even_pos) += a[i]; // positions are 1-based
    }
    if (total % 2 != 0) throw InternalError("base-type coefficient sum is odd");

    VertexNorms v;
    v.x10 = total / 2 - 1;
    v.x01 = v.x10;
    if (a.size() % 2 == 1) {
        v.x11 = even_pos;
        v.x1m1 = odd_pos - 2;
    } else {
        v.x11 = even_pos - 1;
        v.x1m1 = odd_pos - 1;
    }
    if (v.x10 < 0 || v.x11 < 0 || v.x1m1 < 0) {
        throw InternalError("base-type vertex norm came out negative");
    }
    if (v.x11 + v.x1m1 != 2 * v.x10) {
        throw InternalError("base-type vertex norms violate x11 + x1m1 = 2*x10");
    }
    if (d.mirror) std::swap(v.x11, v.x1m1);
    return v;
}

// A diagram is plus-type when the symmetric class is as cheap as possible
// (x(l1) + x(l2) = x(l1+l2)) and minus-type for the antisymmetric class.
// For base-type norms both equalities together force everything to vanish.
enum class PmType { plus, minus, both, neither };

inline PmType pm_type(const VertexNorms& v) {
    const bool plus = (v.x10 + v.x01 == v.x11);
    const bool minus = (v.x10 + v.x01 == v.x1m1);
    if (plus && minus) return PmType::both;
    if (plus) return PmType::plus;
    if (minus) return PmType::minus;
    return PmType::neither;
}

inline PmType pm_type(const RationalDiagram& d) { return pm_type(base_vertex_norms(d)); }

} // namespace tnorm
