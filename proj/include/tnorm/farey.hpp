#pragma once

// The tree T_{1/0} of even-denominator vertices: the Farey tessellation with
// the orbit of the edge (0/1, 1/1) removed and the orbit of (1/0, 1/2) added,
// under the Mobius transformations whose lower-left entry is even. Distance
// from 1/0 in this tree computes x(l1) directly, which gives an oracle that
// shares no code with the diagram pipeline.
//
// The quads of the modified tessellation have corners A = u, B = v,
// C = u + 2v, D = u + v for a unimodular column pair (u, v); the tree edge is
// the diagonal (A, C), and each diagonal belongs to exactly one quad. The
// quad adjacency graph is a tree, so a breadth-first walk that never turns
// back visits each quad once. 1/0 has infinitely many neighbours (all the
// half-integer translates), so the walk is restricted to the window [0, 1]:
// from the base quad (1/0, 0/1, 1/2, 1/1) it only descends through the sides
// (0/1, 1/2) and (1/2, 1/1), which keeps every later corner inside (0, 1).
//
// Pruning: every vertex strictly beyond a side (X, Y) is m*X + n*Y with
// m, n >= 1, so its denominator is at least den(X) + den(Y). A side whose
// denominator sum exceeds max_den therefore leads to no retainable edge.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tnorm/errors.hpp"
#include "tnorm/fraction.hpp"

namespace tnorm {

struct T10Graph {
    std::vector<Fraction> vertices; // vertex 0 is always 1/0
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::vector<std::size_t>> adj;

    std::optional<std::size_t> find_vertex(const Fraction& f) const {
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            if (vertices[i] == f) return i;
        }
        return std::nullopt;
    }
};

namespace farey_detail {

struct Vec {
    long long p; // numerator
    long long q; // denominator, any sign inside the walk
};

inline Vec add(Vec a, Vec b) { return {a.p + b.p, a.q + b.q}; }
inline Vec add2(Vec a, Vec b) { return {a.p + 2 * b.p, a.q + 2 * b.q}; }
inline Vec neg(Vec a) { return {-a.p, -a.q}; }

inline long long abs_den(Vec a) { return a.q < 0 ? -a.q : a.q; }

// Canonical (p, q) with q >= 0; corners of unimodular quads are primitive
// already, so no gcd reduction is needed.
inline std::pair<long long, long long> canon(Vec a) {
    if (a.q < 0 || (a.q == 0 && a.p < 0)) a = neg(a);
    return {a.p, a.q};
}

struct PairHash {
    std::size_t operator()(const std::pair<long long, long long>& v) const {
        std::uint64_t h = static_cast<std::uint64_t>(v.first) * 0x9e3779b97f4a7c15ULL;
        h ^= static_cast<std::uint64_t>(v.second) + 0x7f4a7c15u + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

enum Side : int { kNone = 0, kAB, kBC, kCD, kDA };

struct Quad {
    Vec u, v;
    int came_from; // side label in THIS quad's frame
};

// Side through which a neighbour is entered, in the neighbour's own frame:
// descending through BC or DA lands on the new quad's AB side, descending
// through AB or CD lands on its DA side. Worked out from the column pairs
// below (the CD neighbour reproduces the crossed side as its (D', A')).
inline int entry_side(int descended_through) {
    switch (descended_through) {
        case kAB: return kDA;
        case kBC: return kAB;
        case kCD: return kDA;
        case kDA: return kAB;
        default: return kNone;
    }
}

} // namespace farey_detail

// Edges of the tree whose two endpoint denominators are both <= max_den,
// restricted to the window [0,1] plus the root vertex 1/0.
inline T10Graph t10_tree_build(long long max_den) {
    using namespace farey_detail;
    if (max_den < 0) throw DomainError("t10_tree_build needs a nonnegative bound");
    if (max_den > (1LL << 45)) throw DomainError("t10_tree_build bound too large");

    T10Graph g;
    std::unordered_map<std::pair<long long, long long>, std::size_t, PairHash> index;
    auto vertex_id = [&](Vec w) {
        auto key = canon(w);
        auto it = index.find(key);
        if (it != index.end()) return it->second;
        std::size_t id = g.vertices.size();
        index.emplace(key, id);
        g.vertices.emplace_back(Int(key.first), Int(key.second));
        g.adj.emplace_back();
        return id;
    };
    auto add_edge = [&](Vec a, Vec c) {
        std::size_t ia = vertex_id(a), ic = vertex_id(c);
        g.edges.emplace_back(ia, ic);
        g.adj[ia].push_back(ic);
        g.adj[ic].push_back(ia);
    };

    vertex_id(Vec{1, 0}); // the root exists even when no edge survives

    std::deque<Quad> work;
    work.push_back(Quad{{1, 0}, {0, 1}, kNone});
    while (!work.empty()) {
        Quad t = work.front();
        work.pop_front();
        const Vec a = t.u;
        const Vec b = t.v;
        const Vec c = add2(t.u, t.v);
        const Vec d = add(t.u, t.v);

        if (abs_den(a) <= max_den && abs_den(c) <= max_den) add_edge(a, c);

        const bool base = (t.came_from == kNone);
        auto descend = [&](int side, Vec x, Vec y, Quad next) {
            if (t.came_from == side) return;
            if (base && (side == kAB || side == kDA)) return; // window [0,1]
            if (abs_den(x) + abs_den(y) > max_den) return;
            next.came_from = entry_side(side);
            work.push_back(next);
        };
        // Each neighbour shares the named side; the stated column pairs keep
        // determinant +1 and are entered through the side opposite the walk.
        descend(kAB, a, b, Quad{t.u, {b.p - a.p, b.q - a.q}, kAB});
        descend(kBC, b, c, Quad{c, t.v, kBC});
        descend(kCD, c, d, Quad{c, {-2 * t.u.p - 3 * t.v.p, -2 * t.u.q - 3 * t.v.q}, kCD});
        descend(kDA, d, a, Quad{t.u, d, kDA});
    }
    return g;
}

// Path from the root 1/0 to f inside an already built tree, by plain
// breadth-first search; in a tree the found path is the unique one.
inline std::optional<std::vector<Fraction>> t10_path_in(const T10Graph& g, const Fraction& f) {
    auto target = g.find_vertex(f);
    if (!target) return std::nullopt;
    std::vector<std::size_t> parent(g.vertices.size(), SIZE_MAX);
    std::deque<std::size_t> bfs{0};
    std::vector<char> seen(g.vertices.size(), 0);
    seen[0] = 1;
    while (!bfs.empty()) {
        std::size_t v = bfs.front();
        bfs.pop_front();
        if (v == *target) break;
        for (std::size_t w : g.adj[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                parent[w] = v;
                bfs.push_back(w);
            }
        }
    }
    if (!seen[*target]) return std::nullopt;
    std::vector<Fraction> path;
    for (std::size_t v = *target;; v = parent[v]) {
        path.push_back(g.vertices[v]);
        if (v == 0) break;
        if (parent[v] == SIZE_MAX) throw InternalError("t10_path: broken BFS tree");
    }
    std::reverse(path.begin(), path.end());
    return path;
}

// Unique path from 1/0 to f in the tree, found by breadth-first search on
// the truncated tree. The bound starts at den(f) and widens geometrically;
// the mediant argument above shows the first bound already suffices, so the
// widening loop is a guard rail, not a hot path.
inline std::vector<Fraction> t10_path(const Fraction& f) {
    if (f.is_inf() || f <= Fraction(0) || f >= Fraction(1)) {
        throw DomainError("t10_path needs a fraction strictly between 0 and 1");
    }
    if (f.den() % 2 != 0) throw DomainError("t10_path needs an even denominator");
    if (f.den() > Int(1) << 40) throw DomainError("t10_path denominator too large");

    const long long q = static_cast<long long>(f.den());
    const long long cap = q <= (1LL << 20) ? (1LL << 20) * q : (1LL << 45);
    for (long long bound = q;; bound *= 2) {
        if (bound > cap) throw InternalError("t10_path: target not found within widening cap");
        T10Graph g = t10_tree_build(bound);
        if (auto path = t10_path_in(g, f)) return *path;
    }
}

inline long long t10_path_length(const Fraction& f) {
    return static_cast<long long>(t10_path(f).size()) - 1;
}

// x(l1) equals the tree distance minus one.
inline Int x10_via_farey(const Fraction& f) { return Int(t10_path_length(f)) - 1; }

} // namespace tnorm
