#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "eislat/checked.hpp"

namespace eislat {

// The odd unimodular lattice I_{1,9} with basis l, e_1, ..., e_9:
// l.l = 1, l.e_i = 0, e_i.e_j = -delta_ij.
struct I19Vector {
    std::array<int64_t, 10> c{};  // (l-coordinate, e_1 ... e_9)

    friend I19Vector operator+(const I19Vector& x, const I19Vector& y) {
        I19Vector r;
        for (size_t i = 0; i < 10; ++i) r.c[i] = chk_add(x.c[i], y.c[i]);
        return r;
    }
    friend I19Vector operator-(const I19Vector& x, const I19Vector& y) {
        I19Vector r;
        for (size_t i = 0; i < 10; ++i) r.c[i] = chk_sub(x.c[i], y.c[i]);
        return r;
    }
    friend I19Vector operator*(int64_t s, const I19Vector& x) {
        I19Vector r;
        for (size_t i = 0; i < 10; ++i) r.c[i] = chk_mul(s, x.c[i]);
        return r;
    }
    friend bool operator==(const I19Vector& x, const I19Vector& y) { return x.c == y.c; }
    friend bool operator!=(const I19Vector& x, const I19Vector& y) { return !(x == y); }
};

int64_t dot(const I19Vector& x, const I19Vector& y);

I19Vector picard_l();
I19Vector picard_e(size_t i);     // i = 1..9
I19Vector anticanonical_f();      // 3l - e_1 - ... - e_9

bool is_root(const I19Vector& a);                  // a.f = 0 and a.a = -2
std::vector<I19Vector> simple_root_basis();        // alpha_0 ... alpha_8

// s_alpha(c) = c + (alpha.c) alpha
I19Vector reflect(const I19Vector& alpha, const I19Vector& c);

// Eichler-Siegel transformation attached to u with u.f = 0:
//   T_u(c) = c + (c.f) u - (c.u) f - (1/2)(u.u)(c.f) f
I19Vector eichler_siegel(const I19Vector& u, const I19Vector& c);

// The unique element of c + Z f with self-product -1 (requires c.f = 1).
I19Vector exceptional_normalize(const I19Vector& c);

}  // namespace eislat
