#pragma once

// The standard 4-plat diagram of a 2-bridge link, given by the all-positive
// coefficient list of its fraction. Box i holds a_i crossings; odd-indexed
// boxes twist the middle two strands, even-indexed boxes the bottom two.
// Strand A enters at the top left and never crosses anything. The right-hand
// closure caps rows (1,2),(3,4) when k is odd and rows (2,3),(1,4) when k is
// even. The mirror flag reverses every crossing and nothing else.

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "tnorm/contfrac.hpp"
#include "tnorm/errors.hpp"
#include "tnorm/fraction.hpp"

namespace tnorm {

struct RationalDiagram {
    ContinuedFraction boxes; // all coefficients positive; empty = trivial tangle
    bool mirror = false;

    RationalDiagram() = default;
    RationalDiagram(ContinuedFraction cf, bool mirrored = false)
        : boxes(std::move(cf)), mirror(mirrored) {
        for (long long a : boxes.coeffs) {
            if (a <= 0) throw DomainError("diagram boxes must be positive");
        }
    }

    static RationalDiagram from_fraction(const Fraction& f, bool mirrored = false) {
        return RationalDiagram(positive_cf(f), mirrored);
    }

    bool empty() const { return boxes.empty(); }
    std::size_t box_count() const { return boxes.size(); }

    // Fraction of the underlying link. Mirroring sends p/q to (q-p)/q.
    Fraction fraction() const {
        Fraction f = cf_evaluate(boxes);
        if (!mirror) return f;
        return Fraction(f.den() - f.num(), f.den());
    }
};

// Everything the plat closure determines combinatorially: which strands meet
// in each box, which component each strand belongs to, travel directions, and
// the resulting crossing signs. Strands are numbered 0..3 by starting row.
struct BoxTrace {
    long long label = 0;
    int strand_upper = 0;  // strand entering the box's upper row
    int strand_lower = 0;
    bool self = false;     // both strands on the same component
    int crossing_sign = 0; // common sign of all crossings in this box
};

struct ComponentTrace {
    std::vector<BoxTrace> boxes;
    std::array<int, 4> component{}; // strand -> 0 or 1; component 0 holds strand 0
    std::array<int, 4> direction{}; // strand -> +1 rightward, -1 leftward
};

inline ComponentTrace trace_components(const RationalDiagram& d) {
    if (d.empty()) throw DomainError("cannot trace the empty tangle");
    const std::size_t k = d.box_count();

    // Walk the boxes tracking which strand occupies each row.
    std::array<int, 4> perm = {0, 1, 2, 3};
    ComponentTrace out;
    out.boxes.reserve(k);
    for (std::size_t i = 1; i <= k; ++i) {
        const long long a = d.boxes.coeffs[i - 1];
        const int r = (i % 2 == 1) ? 1 : 2;
        BoxTrace bt;
        bt.label = a;
        bt.strand_upper = perm[r];
        bt.strand_lower = perm[r + 1];
        out.boxes.push_back(bt);
        if (a % 2 != 0) std::swap(perm[r], perm[r + 1]);
    }

    // Close up. Left caps always join strands (0,1) and (2,3); the right caps
    // depend on the parity of the box count.
    std::array<std::pair<int, int>, 4> caps;
    caps[0] = {0, 1};
    caps[1] = {2, 3};
    if (k % 2 == 1) {
        caps[2] = {perm[0], perm[1]};
        caps[3] = {perm[2], perm[3]};
    } else {
        caps[2] = {perm[1], perm[2]};
        caps[3] = {perm[0], perm[3]};
    }

    std::array<int, 4> parent = {0, 1, 2, 3};
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (auto [u, v] : caps) parent[find(u)] = find(v);
    int classes = 0;
    for (int v = 0; v < 4; ++v) classes += (find(v) == v);
    if (classes == 1) throw DomainError("diagram closes to a knot, not a 2-component link");
    if (classes != 2) throw InternalError("plat closure produced an impossible component count");

    // With two components the left caps force them to be {0,1} and {2,3}.
    if (find(0) != find(1) || find(2) != find(3) || find(0) == find(2)) {
        throw InternalError("plat components are not the two cap pairs");
    }
    out.component = {0, 0, 1, 1};

    // Each component is one strand out and one strand back; anchor strand 0
    // and strand 2 rightward, their cap partners run leftward.
    out.direction = {1, -1, 1, -1};

    // All crossings in one box share a sign: handedness is fixed by the box
    // parity (middle boxes are positive twists, bottom boxes negative) and
    // the two directions do not change inside the box.
    const int mirror_sign = d.mirror ? -1 : 1;
    for (std::size_t i = 1; i <= k; ++i) {
        BoxTrace& bt = out.boxes[i - 1];
        const int h = (i % 2 == 1) ? 1 : -1;
        bt.crossing_sign = mirror_sign * h * out.direction[bt.strand_upper] *
                           out.direction[bt.strand_lower];
        bt.self = out.component[bt.strand_upper] == out.component[bt.strand_lower];
    }
    return out;
}

// Boxes whose two strands belong to the same component, as (index, label)
// with 1-based indices.
inline std::vector<std::pair<std::size_t, long long>>
self_crossing_boxes(const RationalDiagram& d) {
    ComponentTrace tr = trace_components(d);
    std::vector<std::pair<std::size_t, long long>> out;
    for (std::size_t i = 0; i < tr.boxes.size(); ++i) {
        if (tr.boxes[i].self) out.emplace_back(i + 1, tr.boxes[i].label);
    }
    return out;
}

// Base-type coefficient pattern: a single even box, or odd outer boxes with
// all inner boxes even. These are exactly the diagrams without self-crossing
// boxes (the trace-level check is asserted against this in the tests).
inline bool is_base_type(const RationalDiagram& d) {
    const auto& a = d.boxes.coeffs;
    if (a.empty()) return false;
    const std::size_t k = a.size();
    if (k == 1) return a[0] % 2 == 0;
    if (a.front() % 2 == 0 || a.back() % 2 == 0) return false;
    for (std::size_t i = 1; i + 1 < k; ++i) {
        if (a[i] % 2 != 0) return false;
    }
    return true;
}

// Half the signed count of crossings between the two components.
inline long long linking_number(const RationalDiagram& d) {
    ComponentTrace tr = trace_components(d);
    long long twice = 0;
    for (const BoxTrace& bt : tr.boxes) {
        if (!bt.self) twice += bt.label * bt.crossing_sign;
    }
    if (twice % 2 != 0) throw InternalError("odd signed inter-component crossing count");
    return twice / 2;
}

// Cutting at the self-crossing boxes. Piece j is the coefficient run between
// consecutive self boxes (possibly empty at a run of length zero); sign j
// says whether the piece, read as a standalone plat, keeps the component
// orientations induced by the whole diagram. Each cut contributes the parity
// of its label plus its distance from the previous cut, so sign j is (-1) to
// (p_j + b_1 + ... + b_j) for cut positions p and labels b, and signs[0] = +1.
// The position term matters: a cut between the middle rows hands the tail
// piece to the opposite row pair than a cut between the bottom rows does, and
// that reseating reverses one component exactly when the gap parity says so.
// Label parity alone gets T(1,3,1,4) wrong: its ball must match the mirror
// partner T(4,1,4) up to the diagonal swap, which forces the no-flip branch
// even though the cut label is odd.
struct SplitResult {
    std::vector<RationalDiagram> pieces;
    std::vector<int> signs;
    std::vector<std::pair<std::size_t, long long>> self_boxes;
};

inline SplitResult split_diagram(const RationalDiagram& d) {
    SplitResult out;
    out.self_boxes = self_crossing_boxes(d);
    const auto& a = d.boxes.coeffs;
    std::size_t start = 0; // 0-based start of the current piece
    std::size_t prev = 0;  // 1-based position of the previous self box
    int sign = 1;
    auto flush = [&](std::size_t end) {
        std::vector<long long> run(a.begin() + start, a.begin() + end);
        out.pieces.emplace_back(ContinuedFraction(std::move(run)), false);
        out.signs.push_back(sign);
    };
    for (auto [idx, label] : out.self_boxes) {
        flush(idx - 1);
        if ((label + static_cast<long long>(idx - prev)) % 2 != 0) sign = -sign;
        prev = idx;
        start = idx;
    }
    flush(a.size());
    return out;
}

} // namespace tnorm
