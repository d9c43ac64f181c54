#pragma once

#include <iosfwd>
#include <ostream>

#include "eislat/checked.hpp"

namespace eislat {

// Exact rational with 64-bit numerator/denominator, always normalized
// (den > 0, gcd 1). Overflow throws rather than giving a wrong answer.
struct Rat {
    int64_t num = 0;
    int64_t den = 1;

    Rat() = default;
    Rat(int64_t n) : num(n), den(1) {}
    Rat(int64_t n, int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        if (den < 0) {
            num = chk_neg(num);
            den = chk_neg(den);
        }
        int64_t g = gcd_ll(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    bool is_zero() const { return num == 0; }
    int sign() const { return num > 0 ? 1 : (num < 0 ? -1 : 0); }

    friend Rat operator+(const Rat& x, const Rat& y) {
        int64_t g = gcd_ll(x.den, y.den);
        int64_t xd = x.den / g;
        int64_t yd = y.den / g;
        return Rat(chk_add(chk_mul(x.num, yd), chk_mul(y.num, xd)), chk_mul(chk_mul(xd, g), yd));
    }
    friend Rat operator-(const Rat& x, const Rat& y) { return x + Rat(chk_neg(y.num), y.den); }
    friend Rat operator-(const Rat& x) { return Rat(chk_neg(x.num), x.den); }
    friend Rat operator*(const Rat& x, const Rat& y) {
        int64_t g1 = gcd_ll(x.num, y.den);
        int64_t g2 = gcd_ll(y.num, x.den);
        return Rat(chk_mul(x.num / g1, y.num / g2), chk_mul(x.den / g2, y.den / g1));
    }
    friend Rat operator/(const Rat& x, const Rat& y) {
        if (y.num == 0) throw std::domain_error("rational division by zero");
        return x * Rat(y.den, y.num);
    }
    Rat& operator+=(const Rat& y) { return *this = *this + y; }
    Rat& operator-=(const Rat& y) { return *this = *this - y; }
    Rat& operator*=(const Rat& y) { return *this = *this * y; }
    Rat& operator/=(const Rat& y) { return *this = *this / y; }

    friend bool operator==(const Rat& x, const Rat& y) { return x.num == y.num && x.den == y.den; }
    friend bool operator!=(const Rat& x, const Rat& y) { return !(x == y); }
    friend bool operator<(const Rat& x, const Rat& y) { return (x - y).sign() < 0; }
    friend bool operator<=(const Rat& x, const Rat& y) { return (x - y).sign() <= 0; }
    friend bool operator>(const Rat& x, const Rat& y) { return y < x; }
    friend bool operator>=(const Rat& x, const Rat& y) { return y <= x; }

    bool is_integer() const { return den == 1; }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
        os << r.num;
        if (r.den != 1) os << '/' << r.den;
        return os;
    }
};

// floor(n/d) with sign handled, d > 0 after normalization inside Rat.
inline int64_t rat_floor(const Rat& r) {
    int64_t q = r.num / r.den;
    if (r.num % r.den != 0 && r.num < 0) --q;
    return q;
}

inline int64_t rat_ceil(const Rat& r) { return chk_neg(rat_floor(-r)); }

}  // namespace eislat
