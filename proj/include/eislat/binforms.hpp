#pragma once

#include <map>
#include <string>
#include <vector>

#include "eislat/rational.hpp"

namespace eislat {

// Binary form of fixed degree d with exact rational coefficients:
// F(X, Y) = sum_i c[i] X^i Y^(d-i). The point 0 is [0:1], infinity is [1:0].
struct BinaryForm {
    size_t degree = 0;
    std::vector<Rat> c;  // length degree + 1

    BinaryForm() = default;
    BinaryForm(size_t d, std::vector<Rat> coeffs);

    bool is_zero() const;
    friend BinaryForm operator+(const BinaryForm& x, const BinaryForm& y);
    friend BinaryForm operator*(const BinaryForm& x, const BinaryForm& y);
    BinaryForm pow(size_t e) const;
};

// Multiset of root multiplicities over the algebraic closure (multiplicities
// of finite roots via square-free decomposition, plus the multiplicity at
// infinity), sorted decreasingly.
using MultiplicityProfile = std::vector<size_t>;

// f0^3 + f1^2 for deg f0 = 4, deg f1 = 6; throws if identically zero.
BinaryForm discriminant_form(const BinaryForm& f0, const BinaryForm& f1);

MultiplicityProfile multiplicity_profile(const BinaryForm& f);

enum class DivisorStability { stable, strictly_semistable, minimal_strictly_semistable, unstable };
enum class PairStability { stable, semistable_not_stable, unstable };

const char* to_string(DivisorStability s);
const char* to_string(PairStability s);

// Degree-12 divisor: stable iff all multiplicities < 6; semistable iff <= 6;
// the minimal strictly semistable profile is (6, 6).
DivisorStability divisor_stability(const MultiplicityProfile& profile);

// Weierstrass pair: classified by the maximal common-zero order
// min(3 ord_p f0, 2 ord_p f1): stable if <= 6 everywhere is strict (< 6)...
// stable iff no common zero of order >= 6; unstable iff one of order > 6.
PairStability pair_stability(const BinaryForm& f0, const BinaryForm& f1);

// J-invariant of a minimal strictly semistable orbit (lambda f^2, mu f^3):
// the projective pair [lambda^3 : lambda^3 + mu^2], normalized.
std::pair<int64_t, int64_t> minimal_ss_j_invariant(const Rat& lambda, const Rat& mu);

// --- exact univariate helpers (used by the above; exposed for tests) --------

// Dehomogenized polynomial arithmetic on rational coefficient vectors
// (index = power of x, trailing zeros trimmed).
using RatPoly = std::vector<Rat>;

RatPoly poly_trim(RatPoly p);
size_t poly_deg(const RatPoly& p);  // degree, 0 polynomial -> npos
RatPoly poly_mul(const RatPoly& x, const RatPoly& y);
RatPoly poly_derivative(const RatPoly& p);
RatPoly poly_gcd(RatPoly x, RatPoly y);  // monic gcd

// Yun square-free decomposition: f = c * prod A_i^i with A_i square-free and
// pairwise coprime; returns the list (A_1, A_2, ...).
std::vector<RatPoly> squarefree_decomposition(const RatPoly& f);

}  // namespace eislat
