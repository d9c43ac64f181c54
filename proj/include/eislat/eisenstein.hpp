#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include "eislat/checked.hpp"
#include "eislat/rational.hpp"

namespace eislat {

// The ring O = Z + Z*omega, omega a primitive sixth root of unity, so
// omega^2 = omega - 1. Elements are stored as the exact pair (a, b) for
// a + b*omega; no normalization is ever needed. theta = omega - omega^-1
// generates the ramified prime over 3 (theta^2 = -3).
struct Eis {
    int64_t a = 0;
    int64_t b = 0;

    constexpr Eis() = default;
    constexpr Eis(int64_t a_, int64_t b_) : a(a_), b(b_) {}
    constexpr Eis(int64_t n) : a(n), b(0) {}

    bool is_zero() const { return a == 0 && b == 0; }

    friend Eis operator+(const Eis& x, const Eis& y) { return {chk_add(x.a, y.a), chk_add(x.b, y.b)}; }
    friend Eis operator-(const Eis& x, const Eis& y) { return {chk_sub(x.a, y.a), chk_sub(x.b, y.b)}; }
    friend Eis operator-(const Eis& x) { return {chk_neg(x.a), chk_neg(x.b)}; }
    friend Eis operator*(const Eis& x, const Eis& y) {
        // (a1 + b1 w)(a2 + b2 w), w^2 = w - 1
        int64_t a = chk_sub(chk_mul(x.a, y.a), chk_mul(x.b, y.b));
        int64_t b = chk_add(chk_add(chk_mul(x.a, y.b), chk_mul(x.b, y.a)), chk_mul(x.b, y.b));
        return {a, b};
    }
    Eis& operator+=(const Eis& y) { return *this = *this + y; }
    Eis& operator-=(const Eis& y) { return *this = *this - y; }
    Eis& operator*=(const Eis& y) { return *this = *this * y; }

    friend bool operator==(const Eis& x, const Eis& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const Eis& x, const Eis& y) { return !(x == y); }
    // Lexicographic order on (a, b); used for canonical sorting only.
    friend bool operator<(const Eis& x, const Eis& y) {
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    }

    friend std::ostream& operator<<(std::ostream& os, const Eis& x);
};

inline constexpr Eis omega() { return {0, 1}; }
inline constexpr Eis theta() { return {-1, 2}; }  // omega - omega^-1 = 2w - 1

// conj(a + bw) = (a+b) - bw  (sends omega to omega^-1)
inline Eis conj(const Eis& x) { return {chk_add(x.a, x.b), chk_neg(x.b)}; }

// norm(x) = x * conj(x) = a^2 + ab + b^2 >= 0
inline int64_t norm(const Eis& x) {
    return chk_add(chk_add(chk_mul(x.a, x.a), chk_mul(x.a, x.b)), chk_mul(x.b, x.b));
}

inline bool is_unit(const Eis& x) { return norm(x) == 1; }

// The unit group mu_6 = {omega^k}, in the fixed order 1, w, w^2, -1, -w, -w^2.
inline const std::array<Eis, 6>& units() {
    static const std::array<Eis, 6> u = {Eis{1, 0},  Eis{0, 1},  Eis{-1, 1},
                                         Eis{-1, 0}, Eis{0, -1}, Eis{1, -1}};
    return u;
}

inline Eis omega_pow(int k) {
    k %= 6;
    if (k < 0) k += 6;
    return units()[static_cast<size_t>(k)];
}

// The field with three elements, realized as O/thetaO.
struct F3 {
    uint8_t v = 0;  // 0, 1, 2

    constexpr F3() = default;
    constexpr explicit F3(int x) : v(static_cast<uint8_t>(((x % 3) + 3) % 3)) {}

    friend F3 operator+(F3 x, F3 y) { return F3(x.v + y.v); }
    friend F3 operator-(F3 x, F3 y) { return F3(x.v + 3 - y.v); }
    friend F3 operator*(F3 x, F3 y) { return F3(x.v * y.v); }
    friend F3 operator-(F3 x) { return F3(3 - x.v); }
    F3& operator+=(F3 y) { return *this = *this + y; }
    F3& operator-=(F3 y) { return *this = *this - y; }
    friend bool operator==(F3 x, F3 y) { return x.v == y.v; }
    friend bool operator!=(F3 x, F3 y) { return x.v != y.v; }
    bool is_zero() const { return v == 0; }
    F3 inv() const {
        if (v == 0) throw std::domain_error("inverse of 0 in F3");
        return *this;  // 1 and 2 are self-inverse mod 3
    }
};

// Ring homomorphism O -> F3 with kernel thetaO; omega maps to -1, so
// a + b*omega |-> a - b (mod 3).
inline F3 reduce_mod_theta(const Eis& x) { return F3(static_cast<int>((x.a - x.b) % 3)); }

inline bool divisible_by_theta(const Eis& x) { return reduce_mod_theta(x).is_zero(); }

// Exact division; throws if y does not divide x in O.
inline Eis exact_div(const Eis& x, const Eis& y) {
    if (y.is_zero()) throw std::domain_error("Eisenstein division by zero");
    Eis p = x * conj(y);
    int64_t n = norm(y);
    if (p.a % n != 0 || p.b % n != 0) throw std::domain_error("inexact Eisenstein division");
    return {p.a / n, p.b / n};
}

// Euclidean division: x = q*y + r with norm(r) < norm(y). Rounding the
// exact quotient coordinatewise lands within norm 3/4 of a lattice point,
// so the remainder bound holds strictly.
inline std::pair<Eis, Eis> euclidean_divmod(const Eis& x, const Eis& y) {
    if (y.is_zero()) throw std::domain_error("Eisenstein division by zero");
    Eis p = x * conj(y);
    int64_t n = norm(y);
    auto round_div = [](int64_t u, int64_t v) {
        // nearest integer to u/v, v > 0
        int64_t q = u / v, r = u % v;
        if (2 * r >= v) ++q;
        if (2 * r <= -v) --q;
        return q;
    };
    Eis q{round_div(p.a, n), round_div(p.b, n)};
    Eis r = x - q * y;
    if (!(norm(r) < n)) throw std::logic_error("euclidean_divmod remainder bound failed");
    return {q, r};
}

// Canonical associate: the unit multiple with argument in [0, 60 degrees),
// i.e. a > 0 and b >= 0 (zero maps to zero). Makes gcd output deterministic.
inline Eis canonical_associate(const Eis& x) {
    if (x.is_zero()) return x;
    for (const Eis& u : units()) {
        Eis y = u * x;
        if (y.a > 0 && y.b >= 0) return y;
    }
    throw std::logic_error("no canonical associate found");
}

// gcd, normalized to the canonical associate.
inline Eis gcd(Eis x, Eis y) {
    while (!y.is_zero()) {
        Eis r = euclidean_divmod(x, y).second;
        x = y;
        y = r;
    }
    return canonical_associate(x);
}

inline std::ostream& operator<<(std::ostream& os, const Eis& x) {
    if (x.b == 0) return os << x.a;
    if (x.a != 0) {
        os << x.a;
        os << (x.b > 0 ? "+" : "-");
    } else if (x.b < 0) {
        os << "-";
    }
    int64_t ab = x.b < 0 ? -x.b : x.b;
    if (ab != 1) os << ab << "*";
    return os << "w";
}

// Rational Eisenstein number a + b*omega with a, b in Q. Used by the exact
// solvers (basis identifications, transvection identities); lattice data
// itself always stays in O.
struct EisQ {
    Rat a, b;

    EisQ() = default;
    EisQ(Rat a_, Rat b_) : a(a_), b(b_) {}
    EisQ(const Eis& x) : a(x.a), b(x.b) {}
    EisQ(int64_t n) : a(n), b(0) {}

    bool is_zero() const { return a.is_zero() && b.is_zero(); }

    friend EisQ operator+(const EisQ& x, const EisQ& y) { return {x.a + y.a, x.b + y.b}; }
    friend EisQ operator-(const EisQ& x, const EisQ& y) { return {x.a - y.a, x.b - y.b}; }
    friend EisQ operator-(const EisQ& x) { return {-x.a, -x.b}; }
    friend EisQ operator*(const EisQ& x, const EisQ& y) {
        return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
    }
    friend bool operator==(const EisQ& x, const EisQ& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const EisQ& x, const EisQ& y) { return !(x == y); }

    EisQ& operator+=(const EisQ& y) { return *this = *this + y; }
    EisQ& operator-=(const EisQ& y) { return *this = *this - y; }
    EisQ& operator*=(const EisQ& y) { return *this = *this * y; }
};

inline EisQ conj(const EisQ& x) { return {x.a + x.b, -x.b}; }
inline Rat norm_q(const EisQ& x) { return x.a * x.a + x.a * x.b + x.b * x.b; }

inline EisQ inv(const EisQ& x) {
    Rat n = norm_q(x);
    if (n.is_zero()) throw std::domain_error("inverse of zero");
    EisQ c = conj(x);
    return {c.a / n, c.b / n};
}

inline bool is_integral(const EisQ& x) { return x.a.is_integer() && x.b.is_integer(); }
inline Eis to_eis(const EisQ& x) {
    if (!is_integral(x)) throw std::domain_error("non-integral Eisenstein value");
    return {x.a.num, x.b.num};
}

}  // namespace eislat
