#pragma once

// Exact scalar arithmetic over Q, Q(phi), and Q(omega).  A scalar is
// a + b*alpha with rational a, b, where alpha is the golden ratio phi
// (phi^2 = phi + 1), a primitive cube root of unity omega
// (omega^2 = -1 - omega), or absent (b = 0) for plain rationals.
// No floating point anywhere; rationals are reduced fractions over
// __int128 and every operation checks for overflow.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "hypergraph.hpp"  // MmpError

namespace mmp {

namespace detail {

inline __int128 checked_add(__int128 x, __int128 y) {
    __int128 r;
    if (__builtin_add_overflow(x, y, &r)) throw MmpError("rational overflow");
    return r;
}

inline __int128 checked_mul(__int128 x, __int128 y) {
    __int128 r;
    if (__builtin_mul_overflow(x, y, &r)) throw MmpError("rational overflow");
    return r;
}

inline __int128 gcd128(__int128 x, __int128 y) {
    if (x < 0) x = -x;
    if (y < 0) y = -y;
    while (y) {
        __int128 t = x % y;
        x = y;
        y = t;
    }
    return x;
}

inline std::string int128_to_string(__int128 x) {
    if (x == 0) return "0";
    bool neg = x < 0;
    std::string digits;
    while (x != 0) {
        int d = static_cast<int>(neg ? -(x % 10) : x % 10);
        digits += static_cast<char>('0' + d);
        x /= 10;
    }
    if (neg) digits += '-';
    return {digits.rbegin(), digits.rend()};
}

}  // namespace detail

// Reduced fraction; denominator always positive.
class Rational {
public:
    Rational() = default;
    Rational(long long value) : num_(value) {}  // NOLINT: implicit by design
    Rational(__int128 num, __int128 den) : num_(num), den_(den) { reduce(); }

    __int128 num() const { return num_; }
    __int128 den() const { return den_; }

    friend Rational operator+(const Rational& x, const Rational& y) {
        using namespace detail;
        __int128 g = gcd128(x.den_, y.den_);
        __int128 xs = x.den_ / g;
        __int128 ys = y.den_ / g;
        return Rational(
            checked_add(checked_mul(x.num_, ys), checked_mul(y.num_, xs)),
            checked_mul(x.den_, ys));
    }
    friend Rational operator-(const Rational& x) { return Rational(-x.num_, x.den_); }
    friend Rational operator-(const Rational& x, const Rational& y) {
        return x + (-y);
    }
    friend Rational operator*(const Rational& x, const Rational& y) {
        using namespace detail;
        __int128 g1 = gcd128(x.num_, y.den_);
        __int128 g2 = gcd128(y.num_, x.den_);
        return Rational(checked_mul(x.num_ / g1, y.num_ / g2),
                        checked_mul(x.den_ / g2, y.den_ / g1));
    }
    friend Rational operator/(const Rational& x, const Rational& y) {
        if (y.num_ == 0) throw MmpError("division by zero");
        return x * Rational(y.den_, y.num_);
    }
    Rational& operator+=(const Rational& y) { return *this = *this + y; }
    Rational& operator-=(const Rational& y) { return *this = *this - y; }
    Rational& operator*=(const Rational& y) { return *this = *this * y; }
    Rational& operator/=(const Rational& y) { return *this = *this / y; }

    friend bool operator==(const Rational& x, const Rational& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator!=(const Rational& x, const Rational& y) {
        return !(x == y);
    }
    friend bool operator<(const Rational& x, const Rational& y) {
        // reduced forms with positive denominators; cross-multiply
        return detail::checked_mul(x.num_, y.den_) <
               detail::checked_mul(y.num_, x.den_);
    }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    std::string to_string() const {
        std::string s = detail::int128_to_string(num_);
        if (den_ != 1) s += "/" + detail::int128_to_string(den_);
        return s;
    }

private:
    void reduce() {
        if (den_ == 0) throw MmpError("zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        __int128 g = detail::gcd128(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    __int128 num_ = 0;
    __int128 den_ = 1;
};

enum class Ring { rational, golden, eisenstein };

inline std::string to_string(Ring ring) {
    switch (ring) {
        case Ring::rational: return "rational";
        case Ring::golden: return "golden";
        default: return "eisenstein";
    }
}

inline Ring parse_ring(const std::string& name) {
    if (name == "rational") return Ring::rational;
    if (name == "golden") return Ring::golden;
    if (name == "eisenstein") return Ring::eisenstein;
    throw MmpError("unknown ring '" + name + "'");
}

// a + b*alpha in the given ring.  Arithmetic requires matching rings,
// except that plain rationals (ring rational) combine with anything.
class ExactScalar {
public:
    ExactScalar() = default;
    ExactScalar(long long value)  // NOLINT: implicit by design
        : ring_(Ring::rational), a_(value) {}
    ExactScalar(Ring ring, Rational a, Rational b = Rational())
        : ring_(ring), a_(a), b_(b) {
        if (ring_ == Ring::rational && !b_.is_zero())
            throw MmpError("rational scalar with nonzero alpha part");
    }

    Ring ring() const { return ring_; }
    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    static ExactScalar phi() { return {Ring::golden, 0, 1}; }
    static ExactScalar omega() { return {Ring::eisenstein, 0, 1}; }
    static ExactScalar omega2() { return {Ring::eisenstein, -1, -1}; }

    friend ExactScalar operator+(const ExactScalar& x, const ExactScalar& y) {
        Ring r = join(x, y);
        return {r, x.a_ + y.a_, x.b_ + y.b_};
    }
    friend ExactScalar operator-(const ExactScalar& x) {
        return {x.ring_, -x.a_, -x.b_};
    }
    friend ExactScalar operator-(const ExactScalar& x, const ExactScalar& y) {
        return x + (-y);
    }
    friend ExactScalar operator*(const ExactScalar& x, const ExactScalar& y) {
        Ring r = join(x, y);
        // (a1 + b1*alpha)(a2 + b2*alpha) with alpha^2 = alpha + 1 (phi)
        // or alpha^2 = -1 - alpha (omega)
        Rational cross = x.a_ * y.b_ + x.b_ * y.a_;
        Rational bb = x.b_ * y.b_;
        if (r == Ring::golden) return {r, x.a_ * y.a_ + bb, cross + bb};
        if (r == Ring::eisenstein) return {r, x.a_ * y.a_ - bb, cross - bb};
        return {r, x.a_ * y.a_, 0};
    }
    ExactScalar& operator+=(const ExactScalar& y) { return *this = *this + y; }
    ExactScalar& operator-=(const ExactScalar& y) { return *this = *this - y; }
    ExactScalar& operator*=(const ExactScalar& y) { return *this = *this * y; }

    // Multiplicative inverse within the ring's field.
    ExactScalar inverse() const {
        if (is_zero()) throw MmpError("inverse of zero");
        if (ring_ == Ring::rational || b_.is_zero())
            return {ring_, Rational(1) / a_, 0};
        // 1/(a + b*alpha) = conj-ish elimination: multiply by the algebraic
        // conjugate (a + b - b*phi) for golden [norm a^2 + ab - b^2] or the
        // complex conjugate (a - b - b*omega) for eisenstein
        // [norm a^2 - ab + b^2]
        if (ring_ == Ring::golden) {
            Rational norm = a_ * a_ + a_ * b_ - b_ * b_;
            return {ring_, (a_ + b_) / norm, -b_ / norm};
        }
        Rational norm = a_ * a_ - a_ * b_ + b_ * b_;
        return {ring_, (a_ - b_) / norm, -b_ / norm};
    }
    friend ExactScalar operator/(const ExactScalar& x, const ExactScalar& y) {
        return x * y.inverse();
    }

    // Conjugation: identity on rational and golden; omega -> omega^2 on
    // eisenstein, i.e. a + b*omega -> (a - b) - b*omega.
    ExactScalar conj() const {
        if (ring_ == Ring::eisenstein) return {ring_, a_ - b_, -b_};
        return *this;
    }

    friend bool operator==(const ExactScalar& x, const ExactScalar& y) {
        if (x.is_rational() && y.is_rational()) return x.a_ == y.a_;
        join(x, y);  // reject golden-vs-eisenstein comparisons
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const ExactScalar& x, const ExactScalar& y) {
        return !(x == y);
    }
    // Total order for canonical forms and map keys: by (a, b) rationally.
    friend bool operator<(const ExactScalar& x, const ExactScalar& y) {
        if (x.a_ != y.a_) return x.a_ < y.a_;
        return x.b_ < y.b_;
    }

    std::string to_string() const {
        if (b_.is_zero()) return a_.to_string();
        const char* alpha = ring_ == Ring::golden ? "phi" : "w";
        std::string bs;
        if (b_ == Rational(1))
            bs = alpha;
        else if (b_ == Rational(-1))
            bs = std::string("-") + alpha;
        else
            bs = b_.to_string() + alpha;
        if (a_.is_zero()) return bs;
        return a_.to_string() + (bs[0] == '-' ? "" : "+") + bs;
    }

private:
    static Ring join(const ExactScalar& x, const ExactScalar& y) {
        if (x.ring_ == y.ring_) return x.ring_;
        if (x.ring_ == Ring::rational && x.b_.is_zero()) return y.ring_;
        if (y.ring_ == Ring::rational && y.b_.is_zero()) return x.ring_;
        throw MmpError("mixed-ring arithmetic (" + mmp::to_string(x.ring_) +
                       " vs " + mmp::to_string(y.ring_) + ")");
    }

    Ring ring_ = Ring::rational;
    Rational a_;
    Rational b_;
};

}  // namespace mmp
