#pragma once

// Satellite composition of norm balls. When a companion link L (linking
// number lambda) is combined with a pattern link L' (linking number lambda')
// the composed norm is x(a,b) = x_L(lambda'*a, b) + x_L'(a, lambda*b), so the
// breakpoint directions of the sum are the two ball's directions rescaled on
// one coordinate each. Iterating the construction against a fixed hexagonal
// seed yields balls with any prescribed even face count.

#include <string>
#include <vector>

#include "tnorm/errors.hpp"
#include "tnorm/fraction.hpp"
#include "tnorm/thurston_ball.hpp"

namespace tnorm {

// The geometric hypotheses behind the composition (nonsplit pattern, the
// companion torus essential) are the caller's lookout; this layer only sums
// norm data.
struct SatelliteInput {
    NormBall companion;
    Int lk_companion; // lambda
    NormBall pattern;
    Int lk_pattern; // lambda'
};

inline Fraction satellite_evaluate(const SatelliteInput& s, const Fraction& a,
                                   const Fraction& b) {
    const Fraction lam(s.lk_companion, Int(1));
    const Fraction lamp(s.lk_pattern, Int(1));
    return evaluate(s.companion, lamp * a, b) + evaluate(s.pattern, a, lam * b);
}

// Breakpoints of the composed norm: companion directions (p,q) map to
// (p, lambda'*q), pattern directions to (lambda*p, q). A zero linking number
// collapses some directions onto the axes (and can send one to the zero
// vector, which is dropped), so both axes join the candidate set in that
// case; the ball builder prunes whatever is not an actual breakpoint.
inline NormBall satellite_ball(const SatelliteInput& s) {
    std::vector<IVec> candidates;
    auto add = [&candidates](const Int& a, const Int& b) {
        if (a == 0 && b == 0) return;
        candidates.push_back(canonical_direction(a, b));
    };
    auto add_ball = [&](const NormBall& ball, bool companion) {
        auto add_mapped = [&](const IVec& d) {
            if (companion) add(d.a, s.lk_pattern * d.b);
            else add(s.lk_companion * d.a, d.b);
        };
        for (const RayInfo& r : ball.finite_rays) add_mapped(r.dir);
        for (const IVec& w : ball.null_dirs) add_mapped(w);
    };
    add_ball(s.companion, true);
    add_ball(s.pattern, false);
    if (s.lk_companion == 0 || s.lk_pattern == 0) {
        add(1, 0);
        add(0, 1);
    }
    SeminormFn x = [&s](const Int& a, const Int& b) {
        return satellite_evaluate(s, Fraction(a, Int(1)), Fraction(b, Int(1)));
    };
    return ball_from_breakpoint_candidates(candidates, x);
}

struct FamilyStep {
    NormBall ball;
    Int lk;
    std::string provenance;
};

// Iterate the satellite step against a fixed seed whose rays are exactly
// {0, 1, inf} and whose linking number is at least 2. Step i then has rays
// {0, lk^-i, lk^-i+2, ..., lk^i, inf}, face count 2(i+3), and linking number
// lk^(i+1). Returns steps 0..n with step 0 the seed itself.
inline std::vector<FamilyStep> iterated_family(const FamilyStep& seed, int n) {
    if (n < 0) throw DomainError("family size must be nonnegative");
    const std::vector<Fraction> wanted = {Fraction(0), Fraction(1), Fraction::infinity()};
    if (rays_of(seed.ball) != wanted) {
        throw DomainError("family seed must have rays exactly {0, 1, inf}");
    }
    if (seed.lk < 2) throw DomainError("family seed must have linking number at least 2");

    std::vector<FamilyStep> steps;
    steps.push_back(seed);
    for (int i = 1; i <= n; ++i) {
        SatelliteInput in{steps.back().ball, steps.back().lk, seed.ball, seed.lk};
        FamilyStep next;
        next.ball = satellite_ball(in);
        next.lk = steps.back().lk * seed.lk;
        next.provenance = "satellite of step " + std::to_string(i - 1) + " with the seed";
        steps.push_back(next);
    }
    return steps;
}

// A ball with exactly 2n faces. Small n come straight from two-bridge links
// (Hopf plane, 1/4 strip, 7/16 square, 5/14 hexagon); n >= 4 stacks n-3
// satellite steps over the mirrored 5/14 hexagon. That seed's rays are
// {0, 1, inf}; its linking number is supplied as 3 rather than traced, the
// value the face-count tower is calibrated for.
struct FaceCountResult {
    NormBall ball;
    std::string provenance;
    std::vector<FamilyStep> chain;
};

inline FaceCountResult ball_with_face_count(int n) {
    if (n < 0) throw DomainError("face count parameter must be nonnegative");
    FaceCountResult out;
    if (n <= 3) {
        const Fraction f = (n == 0)   ? Fraction(1, 2)
                           : (n == 1) ? Fraction(1, 4)
                           : (n == 2) ? Fraction(7, 16)
                                      : Fraction(5, 14);
        RationalDiagram d = RationalDiagram::from_fraction(f);
        out.ball = build_ball(d);
        out.provenance = "two-bridge link " + f.str();
        out.chain = {FamilyStep{out.ball, Int(linking_number(d)), out.provenance}};
    } else {
        RationalDiagram seed_diagram(positive_cf(Fraction(5, 14)), true);
        FamilyStep seed{build_ball(seed_diagram), Int(3),
                        "mirrored 5/14 hexagon seed, linking number 3"};
        out.chain = iterated_family(seed, n - 3);
        out.ball = out.chain.back().ball;
        out.provenance = "tower of " + std::to_string(n - 3) +
                         " satellite steps over the mirrored 5/14 hexagon";
    }
    if (face_count(out.ball) != 2 * n) {
        throw InternalError("face-count construction produced the wrong ball");
    }
    return out;
}

} // namespace tnorm
