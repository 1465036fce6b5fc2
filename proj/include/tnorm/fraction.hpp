#pragma once

// Exact rational arithmetic on arbitrary-precision integers, with a single
// unsigned point at infinity (canonical form 1/0). Infinity exists so that
// slopes and convergents can pass through it; ordinary arithmetic refuses it.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "tnorm/errors.hpp"

namespace tnorm {

using Int = boost::multiprecision::cpp_int;

inline Int int_gcd(Int a, Int b) {
    using boost::multiprecision::gcd;
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    return gcd(a, b);
}

class Fraction {
public:
    Fraction() : num_(0), den_(1) {}
    Fraction(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }
    Fraction(long long num, long long den) : num_(num), den_(den) { normalize(); }
    // NOLINTNEXTLINE: implicit on purpose, integers embed as n/1
    Fraction(long long n) : num_(n), den_(1) {}

    static Fraction infinity() { return Fraction(Int(1), Int(0)); }

    // Accepts "p", "p/q", and "inf". Used by the CLI and by tests.
    static Fraction parse(const std::string& text) {
        if (text == "inf") return infinity();
        auto slash = text.find('/');
        try {
            if (slash == std::string::npos) return Fraction(Int(text), Int(1));
            Int num(text.substr(0, slash));
            Int den(text.substr(slash + 1));
            return Fraction(num, den);
        } catch (const std::exception&) {
            throw DomainError("cannot parse fraction '" + text + "'");
        }
    }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_inf() const { return den_ == 0; }
    bool is_zero() const { return num_ == 0 && den_ != 0; }
    bool is_integer() const { return den_ == 1; }

    int sign() const {
        if (is_inf()) throw DomainError("sign of infinity");
        return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1);
    }

    std::string str() const {
        if (is_inf()) return "inf";
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

    Fraction reciprocal() const {
        if (num_ == 0 && den_ == 0) throw InternalError("0/0 reciprocal");
        return Fraction(den_, num_);
    }

    Fraction operator-() const {
        if (is_inf()) return *this; // infinity is unsigned
        return Fraction(-num_, den_);
    }

    Fraction abs() const {
        if (is_inf()) return *this;
        return num_ < 0 ? Fraction(-num_, den_) : *this;
    }

    friend Fraction operator+(const Fraction& a, const Fraction& b) {
        a.require_finite("+"); b.require_finite("+");
        return Fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Fraction operator-(const Fraction& a, const Fraction& b) {
        a.require_finite("-"); b.require_finite("-");
        return Fraction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Fraction operator*(const Fraction& a, const Fraction& b) {
        a.require_finite("*"); b.require_finite("*");
        return Fraction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Fraction operator/(const Fraction& a, const Fraction& b) {
        a.require_finite("/"); b.require_finite("/");
        if (b.num_ == 0) throw DomainError("division by zero");
        return Fraction(a.num_ * b.den_, a.den_ * b.num_);
    }

    Fraction& operator+=(const Fraction& o) { return *this = *this + o; }
    Fraction& operator-=(const Fraction& o) { return *this = *this - o; }
    Fraction& operator*=(const Fraction& o) { return *this = *this * o; }
    Fraction& operator/=(const Fraction& o) { return *this = *this / o; }

    // Total order by cross multiplication. Denominators are nonnegative, so
    // this is the usual order on finite values with 1/0 above all of them.
    friend bool operator<(const Fraction& a, const Fraction& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Fraction& a, const Fraction& b) { return b < a; }
    friend bool operator<=(const Fraction& a, const Fraction& b) { return !(b < a); }
    friend bool operator>=(const Fraction& a, const Fraction& b) { return !(a < b); }
    friend bool operator==(const Fraction& a, const Fraction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Fraction& a, const Fraction& b) { return !(a == b); }

private:
    void normalize() {
        if (den_ == 0) {
            if (num_ == 0) throw DomainError("0/0 is not a fraction");
            num_ = 1; // unsigned infinity
            return;
        }
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        Int g = int_gcd(num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    void require_finite(const char* op) const {
        if (is_inf()) throw DomainError(std::string("infinite operand to '") + op + "'");
    }

    Int num_;
    Int den_;
};

inline std::string to_string(const Fraction& f) { return f.str(); }

} // namespace tnorm
