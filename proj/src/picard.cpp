#include "eislat/picard.hpp"

#include <stdexcept>

namespace eislat {

int64_t dot(const I19Vector& x, const I19Vector& y) {
    int64_t s = chk_mul(x.c[0], y.c[0]);
    for (size_t i = 1; i < 10; ++i) s = chk_sub(s, chk_mul(x.c[i], y.c[i]));
    return s;
}

I19Vector picard_l() {
    I19Vector v;
    v.c[0] = 1;
    return v;
}

I19Vector picard_e(size_t i) {
    if (i < 1 || i > 9) throw std::invalid_argument("exceptional index must be 1..9");
    I19Vector v;
    v.c[i] = 1;
    return v;
}

I19Vector anticanonical_f() {
    I19Vector v;
    v.c[0] = 3;
    for (size_t i = 1; i < 10; ++i) v.c[i] = -1;
    return v;
}

bool is_root(const I19Vector& a) {
    return dot(a, anticanonical_f()) == 0 && dot(a, a) == -2;
}

std::vector<I19Vector> simple_root_basis() {
    std::vector<I19Vector> out;
    I19Vector a0 = picard_l() - picard_e(1) - picard_e(2) - picard_e(3);
    out.push_back(a0);
    for (size_t i = 1; i <= 8; ++i) out.push_back(picard_e(i) - picard_e(i + 1));
    return out;
}

I19Vector reflect(const I19Vector& alpha, const I19Vector& c) {
    if (!is_root(alpha)) throw std::invalid_argument("reflection needs a root");
    return c + dot(alpha, c) * alpha;
}

I19Vector eichler_siegel(const I19Vector& u, const I19Vector& c) {
    I19Vector f = anticanonical_f();
    if (dot(u, f) != 0) throw std::invalid_argument("Eichler-Siegel parameter must pair to zero with f");
    int64_t uu = dot(u, u);
    if (uu % 2 != 0) throw std::logic_error("u.u must be even on f-perp");
    int64_t cf = dot(c, f);
    int64_t cu = dot(c, u);
    return c + cf * u - cu * f - chk_mul(uu / 2, cf) * f;
}

I19Vector exceptional_normalize(const I19Vector& c) {
    I19Vector f = anticanonical_f();
    if (dot(c, f) != 1) throw std::invalid_argument("normalization needs c.f = 1");
    int64_t cc = dot(c, c);
    if ((cc % 2 + 2) % 2 != 1) throw std::logic_error("c.c must be odd when c.f = 1");
    int64_t k = (1 + cc) / 2;
    I19Vector e = c - k * f;
    if (dot(e, e) != -1 || dot(e, f) != 1) throw std::logic_error("normalization postcondition failed");
    return e;
}

}  // namespace eislat
