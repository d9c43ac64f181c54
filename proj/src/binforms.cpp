#include "eislat/binforms.hpp"

#include <algorithm>
#include <stdexcept>

namespace eislat {

BinaryForm::BinaryForm(size_t d, std::vector<Rat> coeffs) : degree(d), c(std::move(coeffs)) {
    if (c.size() != degree + 1) throw std::invalid_argument("binary form needs degree+1 coefficients");
}

bool BinaryForm::is_zero() const {
    for (const Rat& x : c)
        if (!x.is_zero()) return false;
    return true;
}

BinaryForm operator+(const BinaryForm& x, const BinaryForm& y) {
    if (x.degree != y.degree) throw std::invalid_argument("sum of forms of different degrees");
    std::vector<Rat> c(x.degree + 1);
    for (size_t i = 0; i <= x.degree; ++i) c[i] = x.c[i] + y.c[i];
    return BinaryForm(x.degree, std::move(c));
}

BinaryForm operator*(const BinaryForm& x, const BinaryForm& y) {
    std::vector<Rat> c(x.degree + y.degree + 1, Rat(0));
    for (size_t i = 0; i <= x.degree; ++i)
        for (size_t j = 0; j <= y.degree; ++j) c[i + j] += x.c[i] * y.c[j];
    return BinaryForm(x.degree + y.degree, std::move(c));
}

BinaryForm BinaryForm::pow(size_t e) const {
    BinaryForm r(0, {Rat(1)});
    for (size_t i = 0; i < e; ++i) r = r * *this;
    return r;
}

BinaryForm discriminant_form(const BinaryForm& f0, const BinaryForm& f1) {
    if (f0.degree != 4 || f1.degree != 6)
        throw std::invalid_argument("discriminant form needs degrees (4, 6)");
    BinaryForm d = f0.pow(3) + f1.pow(2);
    if (d.is_zero()) throw std::domain_error("discriminant form vanishes identically (3D0 = 2D1 locus)");
    return d;
}

// --- polynomial helpers ------------------------------------------------------

RatPoly poly_trim(RatPoly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

size_t poly_deg(const RatPoly& p) {
    RatPoly t = poly_trim(p);
    if (t.empty()) return static_cast<size_t>(-1);
    return t.size() - 1;
}

RatPoly poly_mul(const RatPoly& x, const RatPoly& y) {
    RatPoly xt = poly_trim(x), yt = poly_trim(y);
    if (xt.empty() || yt.empty()) return {};
    RatPoly r(xt.size() + yt.size() - 1, Rat(0));
    for (size_t i = 0; i < xt.size(); ++i)
        for (size_t j = 0; j < yt.size(); ++j) r[i + j] += xt[i] * yt[j];
    return r;
}

RatPoly poly_derivative(const RatPoly& p) {
    RatPoly r;
    for (size_t i = 1; i < p.size(); ++i) r.push_back(Rat(static_cast<int64_t>(i)) * p[i]);
    return poly_trim(r);
}

static RatPoly poly_monic(RatPoly p) {
    p = poly_trim(p);
    if (p.empty()) return p;
    Rat lead = p.back();
    for (Rat& c : p) c /= lead;
    return p;
}

// --- integer polynomial helpers --------------------------------------------
// The pseudo-remainder sequences need more headroom than 64 bits for
// degree-12 inputs, so this kernel runs on checked 128-bit integers and
// converts back at the boundary (where divisor bounds keep results small).

using I128 = __int128;
using IPoly = std::vector<I128>;

static I128 chk_mul128(I128 x, I128 y) {
    I128 r;
    if (__builtin_mul_overflow(x, y, &r)) throw overflow_error{};
    return r;
}

static I128 chk_sub128(I128 x, I128 y) {
    I128 r;
    if (__builtin_sub_overflow(x, y, &r)) throw overflow_error{};
    return r;
}

static I128 gcd128(I128 a, I128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        I128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

static IPoly ipoly_trim(IPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

static IPoly ipoly_derivative(const IPoly& p) {
    IPoly r;
    for (size_t i = 1; i < p.size(); ++i) r.push_back(chk_mul128(static_cast<I128>(i), p[i]));
    return ipoly_trim(r);
}

static IPoly ipoly_sub(const IPoly& x, const IPoly& y) {
    IPoly r(std::max(x.size(), y.size()), 0);
    for (size_t i = 0; i < x.size(); ++i) r[i] += x[i];
    for (size_t i = 0; i < y.size(); ++i) r[i] = chk_sub128(r[i], y[i]);
    return ipoly_trim(r);
}

static void ipoly_strip(IPoly& z) {
    z = ipoly_trim(z);
    I128 content = 0;
    for (I128 c : z) content = gcd128(content, c);
    if (content > 1)
        for (I128& c : z) c /= content;
    if (!z.empty() && z.back() < 0)
        for (I128& c : z) c = -c;
}

// exact division of integer polynomials; forward declaration
static IPoly ipoly_exact_div(IPoly x, const IPoly& y);

// gcd over F_p, monic, coefficients in [0, p)
static std::vector<int64_t> pgcd_mod(const IPoly& a, const IPoly& b, int64_t p) {
    auto redp = [&](const IPoly& z) {
        std::vector<int64_t> r;
        for (I128 c : z) r.push_back(static_cast<int64_t>(((c % p) + p) % p));
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    };
    auto invp = [&](int64_t x) {
        int64_t e = p - 2, acc = 1, base = x % p;
        while (e) {
            if (e & 1) acc = static_cast<int64_t>((static_cast<I128>(acc) * base) % p);
            base = static_cast<int64_t>((static_cast<I128>(base) * base) % p);
            e >>= 1;
        }
        return acc;
    };
    std::vector<int64_t> x = redp(a), y = redp(b);
    while (!y.empty()) {
        // x mod y over F_p
        int64_t inv_ly = invp(y.back());
        while (x.size() >= y.size() && !x.empty()) {
            int64_t f = static_cast<int64_t>((static_cast<I128>(x.back()) * inv_ly) % p);
            size_t shift = x.size() - y.size();
            for (size_t i = 0; i < y.size(); ++i) {
                I128 t = static_cast<I128>(x[shift + i]) - static_cast<I128>(f) * y[i];
                x[shift + i] = static_cast<int64_t>(((t % p) + p) % p);
            }
            while (!x.empty() && x.back() == 0) x.pop_back();
        }
        std::swap(x, y);
    }
    if (!x.empty()) {
        int64_t inv_lx = invp(x.back());
        for (int64_t& c : x) c = static_cast<int64_t>((static_cast<I128>(c) * inv_lx) % p);
    }
    return x;
}

// Certified modular gcd: reconstruct a candidate by CRT over machine primes,
// then prove it by exact trial division into both inputs.
static IPoly ipoly_gcd(IPoly a, IPoly b) {
    ipoly_strip(a);
    ipoly_strip(b);
    if (a.empty()) return b;
    if (b.empty()) return a;
    // 2^61 - 1, 2^31 - 1, 2^32 - 5: CRT modulus stays inside 128 bits
    static const int64_t primes[] = {2305843009213693951LL, 2147483647LL, 4294967291LL};
    I128 gamma = gcd128(a.back(), b.back());
    std::vector<I128> acc;   // CRT accumulation of gamma * monic gcd, symmetric lift
    I128 modulus = 0;
    size_t gdeg = SIZE_MAX;
    for (int64_t p : primes) {
        if (a.back() % p == 0 || b.back() % p == 0) continue;
        std::vector<int64_t> gp = pgcd_mod(a, b, p);
        if (gp.empty()) continue;  // cannot happen for nonzero inputs
        if (gp.size() == 1) {
            // coprime mod p certifies coprime over Q
            return {1};
        }
        if (gp.size() - 1 > gdeg) continue;  // unlucky prime, skip
        if (gdeg == SIZE_MAX || gp.size() - 1 < gdeg) {
            // restart accumulation at this (smaller, hence luckier) degree
            gdeg = gp.size() - 1;
            acc.assign(gp.size(), 0);
            modulus = 0;
        }
        // target image: gamma * gp mod p
        std::vector<int64_t> target(gp.size());
        int64_t gm = static_cast<int64_t>(((gamma % p) + p) % p);
        for (size_t i = 0; i < gp.size(); ++i)
            target[i] = static_cast<int64_t>((static_cast<I128>(gp[i]) * gm) % p);
        if (modulus == 0) {
            for (size_t i = 0; i < gp.size(); ++i) acc[i] = target[i];
            modulus = p;
        } else {
            // CRT: find acc' = acc mod modulus, = target mod p
            I128 m_inv = 0;  // modulus^{-1} mod p
            {
                int64_t mm = static_cast<int64_t>(((modulus % p) + p) % p);
                int64_t e = p - 2, r = 1, base = mm;
                while (e) {
                    if (e & 1) r = static_cast<int64_t>((static_cast<I128>(r) * base) % p);
                    base = static_cast<int64_t>((static_cast<I128>(base) * base) % p);
                    e >>= 1;
                }
                m_inv = r;
            }
            for (size_t i = 0; i < acc.size(); ++i) {
                I128 diff = (static_cast<I128>(target[i]) - acc[i]) % p;
                if (diff < 0) diff += p;
                I128 t = (diff * m_inv) % p;
                acc[i] = acc[i] + chk_mul128(modulus, t);
            }
            modulus = chk_mul128(modulus, p);
        }
        // symmetric lift and certification by trial division
        IPoly cand(acc.size());
        for (size_t i = 0; i < acc.size(); ++i) {
            I128 c = acc[i] % modulus;
            if (c > modulus / 2) c -= modulus;
            if (c < -(modulus / 2)) c += modulus;
            cand[i] = c;
        }
        ipoly_strip(cand);
        if (cand.empty() || cand.size() - 1 != gdeg) continue;
        try {
            ipoly_exact_div(a, cand);
            ipoly_exact_div(b, cand);
            return cand;  // divides both and has the maximal possible degree
        } catch (const std::logic_error&) {
            // not yet lifted far enough (or unlucky); continue with more primes
        }
    }
    throw overflow_error{};
}

// exact division of integer polynomials; throws if not exact
static IPoly ipoly_exact_div(IPoly x, const IPoly& y) {
    IPoly yt = ipoly_trim(y);
    if (yt.empty()) throw std::domain_error("polynomial division by zero");
    x = ipoly_trim(x);
    if (x.empty()) return {};
    if (x.size() < yt.size()) throw std::logic_error("inexact integer polynomial division");
    IPoly q(x.size() - yt.size() + 1, 0);
    while (x.size() >= yt.size() && !x.empty()) {
        if (x.back() % yt.back() != 0) throw std::logic_error("inexact integer polynomial division");
        I128 f = x.back() / yt.back();
        size_t shift = x.size() - yt.size();
        q[shift] = f;
        for (size_t i = 0; i < yt.size(); ++i)
            x[shift + i] = chk_sub128(x[shift + i], chk_mul128(f, yt[i]));
        x = ipoly_trim(x);
    }
    if (!x.empty()) throw std::logic_error("inexact integer polynomial division");
    return ipoly_trim(q);
}

// primitive integer image of a rational polynomial
static IPoly to_primitive_int(const RatPoly& p) {
    RatPoly t = poly_trim(p);
    int64_t lcm = 1;
    for (const Rat& c : t) lcm = chk_mul(lcm / gcd_ll(lcm, c.den), c.den);
    IPoly z;
    for (const Rat& c : t) z.push_back(chk_mul128(c.num, lcm / c.den));
    ipoly_strip(z);
    return z;
}

static Rat rat_from_i128(I128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw overflow_error{};
    return Rat(static_cast<int64_t>(v));
}

// gcd via a primitive pseudo-remainder sequence over Z, returned monic.
RatPoly poly_gcd(RatPoly x, RatPoly y) {
    IPoly g = ipoly_gcd(to_primitive_int(x), to_primitive_int(y));
    RatPoly out;
    for (I128 c : g) out.push_back(rat_from_i128(c));
    return poly_monic(out);
}

std::vector<RatPoly> squarefree_decomposition(const RatPoly& f) {
    RatPoly ft = poly_trim(f);
    if (ft.empty()) throw std::invalid_argument("square-free decomposition of the zero polynomial");
    std::vector<RatPoly> out;
    if (ft.size() == 1) return out;  // constants have no roots

    IPoly fi = to_primitive_int(ft);
    IPoly fp = ipoly_derivative(fi);
    IPoly a = ipoly_gcd(fi, fp);
    IPoly b = ipoly_exact_div(fi, a);
    IPoly c = ipoly_exact_div(fp, a);
    IPoly d = ipoly_sub(c, ipoly_derivative(b));
    while (b.size() >= 2) {
        IPoly ai = ipoly_gcd(b, d);
        RatPoly aq;
        for (I128 t : ai) aq.push_back(rat_from_i128(t));
        out.push_back(aq);
        IPoly b2 = ipoly_exact_div(b, ai);
        IPoly c2 = ipoly_exact_div(d, ai);
        b = b2;
        d = ipoly_sub(c2, ipoly_derivative(b));
        if (out.size() > 64) throw std::logic_error("runaway square-free decomposition");
    }
    return out;
}

// dehomogenize: f(x) = F(x, 1); multiplicity at infinity = degree - deg f.
static RatPoly dehomogenize(const BinaryForm& F) {
    RatPoly p(F.c.begin(), F.c.end());
    return poly_trim(p);
}

MultiplicityProfile multiplicity_profile(const BinaryForm& F) {
    if (F.is_zero()) throw std::invalid_argument("multiplicity profile of the zero form");
    RatPoly f = dehomogenize(F);
    MultiplicityProfile prof;
    size_t inf_mult = F.degree - (f.size() - 1);
    if (inf_mult > 0) prof.push_back(inf_mult);
    std::vector<RatPoly> sq = squarefree_decomposition(f);
    for (size_t i = 0; i < sq.size(); ++i) {
        size_t d = poly_deg(sq[i]);
        if (d == static_cast<size_t>(-1)) continue;
        for (size_t k = 0; k < d; ++k) prof.push_back(i + 1);
    }
    std::sort(prof.rbegin(), prof.rend());
    return prof;
}

const char* to_string(DivisorStability s) {
    switch (s) {
        case DivisorStability::stable: return "stable";
        case DivisorStability::strictly_semistable: return "strictly-semistable";
        case DivisorStability::minimal_strictly_semistable: return "minimal-strictly-semistable";
        case DivisorStability::unstable: return "unstable";
    }
    return "?";
}

const char* to_string(PairStability s) {
    switch (s) {
        case PairStability::stable: return "stable";
        case PairStability::semistable_not_stable: return "semistable-not-stable";
        case PairStability::unstable: return "unstable";
    }
    return "?";
}

DivisorStability divisor_stability(const MultiplicityProfile& profile) {
    size_t total = 0, maxm = 0;
    for (size_t m : profile) {
        total += m;
        maxm = std::max(maxm, m);
    }
    if (total != 12) throw std::invalid_argument("divisor stability needs a degree-12 profile");
    if (maxm < 6) return DivisorStability::stable;
    if (maxm > 6) return DivisorStability::unstable;
    if (profile.size() == 2 && profile[0] == 6 && profile[1] == 6)
        return DivisorStability::minimal_strictly_semistable;
    return DivisorStability::strictly_semistable;
}

// roots of f with multiplicity >= k, as a square-free polynomial
static RatPoly mult_at_least(const std::vector<RatPoly>& sq, size_t k) {
    RatPoly p = {Rat(1)};
    for (size_t i = k; i <= sq.size(); ++i)
        if (poly_deg(sq[i - 1]) != static_cast<size_t>(-1)) p = poly_mul(p, sq[i - 1]);
    return p;
}

PairStability pair_stability(const BinaryForm& f0, const BinaryForm& f1) {
    if (f0.degree != 4 || f1.degree != 6)
        throw std::invalid_argument("pair stability needs degrees (4, 6)");
    if (f0.is_zero() && f1.is_zero()) throw std::invalid_argument("pair stability of (0, 0)");

    // min(3 ord f0, 2 ord f1) > 6 iff ord f0 >= 3 and ord f1 >= 4;
    //                        >= 6 iff ord f0 >= 2 and ord f1 >= 3.
    auto has_common_zero = [&](size_t ord0, size_t ord1) {
        // multiplicity at infinity handled directly
        RatPoly p0 = dehomogenize(f0);
        RatPoly p1 = dehomogenize(f1);
        size_t inf0 = f0.is_zero() ? 999 : f0.degree - (p0.size() - 1);
        size_t inf1 = f1.is_zero() ? 999 : f1.degree - (p1.size() - 1);
        if (inf0 >= ord0 && inf1 >= ord1) return true;
        if (f0.is_zero()) {
            std::vector<RatPoly> sq1 = squarefree_decomposition(p1);
            return poly_deg(mult_at_least(sq1, ord1)) >= 1;
        }
        if (f1.is_zero()) {
            std::vector<RatPoly> sq0 = squarefree_decomposition(p0);
            return poly_deg(mult_at_least(sq0, ord0)) >= 1;
        }
        std::vector<RatPoly> sq0 = squarefree_decomposition(p0);
        std::vector<RatPoly> sq1 = squarefree_decomposition(p1);
        RatPoly g = poly_gcd(mult_at_least(sq0, ord0), mult_at_least(sq1, ord1));
        return poly_deg(g) >= 1;
    };

    if (has_common_zero(3, 4)) return PairStability::unstable;
    if (has_common_zero(2, 3)) return PairStability::semistable_not_stable;
    return PairStability::stable;
}

std::pair<int64_t, int64_t> minimal_ss_j_invariant(const Rat& lambda, const Rat& mu) {
    if (lambda.is_zero() && mu.is_zero())
        throw std::invalid_argument("J-invariant of (0, 0)");
    Rat a = lambda * lambda * lambda;
    Rat b = a + mu * mu;
    // normalize the projective pair [a : b] to coprime integers, first positive
    if (a.is_zero()) return {0, 1};
    if (b.is_zero()) return {1, 0};
    Rat q = a / b;
    int64_t n = q.num, d = q.den;
    if (d < 0) {
        n = chk_neg(n);
        d = chk_neg(d);
    }
    return {n, d};
}

}  // namespace eislat
