#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace eislat {

// All exact arithmetic in this library runs on 64-bit integers with overflow
// detection. Inputs are small (Gram entries, short-vector coordinates), but
// gcd chains and normal forms can grow, so every multiply/add goes through
// these helpers and throws instead of wrapping.

struct overflow_error : std::runtime_error {
    overflow_error() : std::runtime_error("exact integer overflow (input too large for 64-bit arithmetic)") {}
};

inline int64_t chk_add(int64_t x, int64_t y) {
    int64_t r;
    if (__builtin_add_overflow(x, y, &r)) throw overflow_error{};
    return r;
}

inline int64_t chk_sub(int64_t x, int64_t y) {
    int64_t r;
    if (__builtin_sub_overflow(x, y, &r)) throw overflow_error{};
    return r;
}

inline int64_t chk_mul(int64_t x, int64_t y) {
    int64_t r;
    if (__builtin_mul_overflow(x, y, &r)) throw overflow_error{};
    return r;
}

inline int64_t chk_neg(int64_t x) { return chk_sub(0, x); }

inline int64_t gcd_ll(int64_t a, int64_t b) {
    if (a < 0) a = chk_neg(a);
    if (b < 0) b = chk_neg(b);
    while (b != 0) {
        int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// floor(sqrt(n)) for n >= 0, exact.
inline int64_t isqrt_ll(int64_t n) {
    if (n < 0) throw std::invalid_argument("isqrt of negative");
    if (n < 2) return n;
    int64_t x = n, y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + n / x) / 2;
    }
    while (x > 0 && x > n / x) --x;
    while ((x + 1) <= n / (x + 1)) ++x;
    return x;
}

}  // namespace eislat
