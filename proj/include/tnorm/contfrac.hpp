#pragma once

// Continued fractions in the convention [a_1,...,a_k] = 1/(a_1 + 1/(... + 1/a_k)).
// Two expansions matter downstream: the all-positive (Euclidean) form, whose
// coefficients are the twist-box sizes of the standard alternating diagram,
// and the all-even form, which exists exactly for even denominators.

#include <limits>
#include <string>
#include <vector>

#include "tnorm/errors.hpp"
#include "tnorm/fraction.hpp"

namespace tnorm {

struct ContinuedFraction {
    std::vector<long long> coeffs;

    ContinuedFraction() = default;
    explicit ContinuedFraction(std::vector<long long> c) : coeffs(std::move(c)) {
        for (long long a : coeffs) {
            if (a == 0) throw DomainError("continued fraction coefficient is zero");
        }
    }

    std::size_t size() const { return coeffs.size(); }
    bool empty() const { return coeffs.empty(); }

    bool all_positive() const {
        for (long long a : coeffs) {
            if (a <= 0) return false;
        }
        return true;
    }

    bool all_even() const {
        for (long long a : coeffs) {
            if (a % 2 != 0) return false;
        }
        return true;
    }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(coeffs[i]);
        }
        return s + "]";
    }
};

// Value of the nested fraction, computed bottom up over exact rationals.
// Mixed-sign inputs can make an intermediate tail cancel its coefficient;
// that is a genuine division by zero and gets a distinguished error.
inline Fraction cf_evaluate(const ContinuedFraction& cf) {
    if (cf.empty()) throw DomainError("empty continued fraction");
    Fraction v(0);
    for (auto it = cf.coeffs.rbegin(); it != cf.coeffs.rend(); ++it) {
        Fraction t = Fraction(*it) + v;
        if (t.is_zero()) throw DomainError("indeterminate expansion");
        v = t.reciprocal();
    }
    return v;
}

// Convergents p_j/q_j for j = 1..k via the matrix recurrence with seeds
// p_0/q_0 = 0/1 and p_{-1}/q_{-1} = 1/0. For mixed-sign coefficients an
// intermediate convergent may be the point at infinity; that is fine here,
// only a vanishing final denominator is an error (cf_evaluate reports it).
inline std::vector<Fraction> convergents(const ContinuedFraction& cf) {
    if (cf.empty()) throw DomainError("empty continued fraction");
    std::vector<Fraction> out;
    out.reserve(cf.size());
    Int p_prev = 1, q_prev = 0; // j = -1
    Int p_cur = 0, q_cur = 1;   // j = 0
    for (long long a : cf.coeffs) {
        Int p_next = Int(a) * p_cur + p_prev;
        Int q_next = Int(a) * q_cur + q_prev;
        if (p_next == 0 && q_next == 0) throw InternalError("degenerate convergent");
        out.emplace_back(p_next, q_next);
        p_prev = p_cur; q_prev = q_cur;
        p_cur = p_next; q_cur = q_next;
    }
    return out;
}

namespace detail {

inline long long checked_small(const Int& v, const char* what) {
    if (v > Int(std::numeric_limits<long long>::max()) ||
        v < Int(std::numeric_limits<long long>::min())) {
        throw DomainError(std::string(what) + " exceeds 64-bit range");
    }
    return static_cast<long long>(v);
}

} // namespace detail

// Euclidean expansion of p/q in (0,1) into positive coefficients. The last
// coefficient comes out >= 2 automatically: a final quotient of 1 would need
// a remainder equal to its divisor.
inline ContinuedFraction positive_cf(const Fraction& f) {
    if (f.is_inf() || f <= Fraction(0) || f >= Fraction(1)) {
        throw DomainError("positive_cf needs a fraction strictly between 0 and 1");
    }
    std::vector<long long> coeffs;
    Int n = f.den(), d = f.num();
    while (d != 0) {
        Int a = n / d; // exact floor, both positive
        Int r = n % d;
        coeffs.push_back(detail::checked_small(a, "continued fraction coefficient"));
        n = d;
        d = r;
    }
    return ContinuedFraction(std::move(coeffs));
}

// Expansion of p/q into even coefficients, defined exactly when q is even.
// Each step replaces the state a/b (with 0 < |a| < b) by the nearest even
// integer c to b/a and the new state sign(a)*(b - c*a)/|a|. A tie between the
// two even neighbours would need b/a to be an odd integer, which cannot
// happen when gcd(a,b) = 1 and b is the even one, so the choice is always
// strict; numerators strictly shrink, which forces termination.
inline ContinuedFraction even_cf(const Fraction& f) {
    if (f.is_inf() || f <= Fraction(0) || f >= Fraction(1)) {
        throw DomainError("even_cf needs a fraction strictly between 0 and 1");
    }
    if (f.den() % 2 != 0) {
        throw DomainError("even_cf needs an even denominator");
    }
    std::vector<long long> coeffs;
    Int a = f.num(), b = f.den();
    while (true) {
        if (a == 0) throw InternalError("even_cf state lost its numerator");
        int sgn = a < 0 ? -1 : 1;
        Int n = b * sgn; // sign of the state value b/a
        Int d = a * sgn; // |a|
        Int two_d = 2 * d;
        // floor division; cpp_int '/' truncates toward zero and n can be negative
        Int q_half;
        if (n >= 0) q_half = n / two_d;
        else q_half = -((-n + two_d - 1) / two_d);
        Int e_lo = 2 * q_half;
        Int e_hi = e_lo + 2;
        Int r_lo = n - e_lo * d; // >= 0
        Int r_hi = e_hi * d - n; // > 0
        if (r_lo == r_hi) throw InternalError("even_cf tie, parity argument violated");
        Int c = (r_lo < r_hi) ? e_lo : e_hi;
        if (c == 0) throw InternalError("even_cf picked zero, |state| >= 1/2 violated");
        coeffs.push_back(detail::checked_small(c, "continued fraction coefficient"));
        Int a_next = sgn * (b - c * a);
        Int b_next = d;
        if (a_next == 0) break;
        if (!((a_next < 0 ? -a_next : a_next) < b_next)) {
            throw InternalError("even_cf state escaped (-1,1)");
        }
        a = a_next;
        b = b_next;
        if (coeffs.size() > 4096) throw InternalError("even_cf failed to terminate");
    }
    return ContinuedFraction(std::move(coeffs));
}

} // namespace tnorm
