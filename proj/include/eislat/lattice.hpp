#pragma once

#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "eislat/linalg.hpp"

namespace eislat {

struct HermitianLattice;
using LatticePtr = std::shared_ptr<const HermitianLattice>;

// A vector with coordinates in the basis of a fixed lattice. Vectors remember
// their lattice; mixing vectors of different lattices in a product is an error.
struct LatticeVector {
    LatticePtr lat;
    std::vector<Eis> c;

    LatticeVector() = default;
    LatticeVector(LatticePtr l, std::vector<Eis> coords);

    friend LatticeVector operator+(const LatticeVector& x, const LatticeVector& y);
    friend LatticeVector operator-(const LatticeVector& x, const LatticeVector& y);
    friend LatticeVector operator-(const LatticeVector& x);
    friend LatticeVector operator*(const Eis& s, const LatticeVector& x);
    friend bool operator==(const LatticeVector& x, const LatticeVector& y) { return x.c == y.c; }
    friend bool operator!=(const LatticeVector& x, const LatticeVector& y) { return !(x == y); }
    // canonical order: lexicographic on the flattened (a, b) coordinate pairs
    friend bool operator<(const LatticeVector& x, const LatticeVector& y);

    bool is_zero() const;
};

struct Inertia {
    size_t p = 0, q = 0, z = 0;
    friend bool operator==(const Inertia& x, const Inertia& y) {
        return x.p == y.p && x.q == y.q && x.z == y.z;
    }
};

// Hermitian O-lattice given by the Gram matrix of its form psi in a fixed
// basis. psi is O-linear in the first argument; values lie in theta*O and
// diagonal entries are integers divisible by 3.
struct HermitianLattice : std::enable_shared_from_this<HermitianLattice> {
    size_t rank;
    EMat gram;

    static LatticePtr create(EMat g);

    LatticeVector vector(std::vector<Eis> coords) const;
    LatticeVector basis_vector(size_t i) const;
    LatticeVector zero_vector() const;

    Eis product(const LatticeVector& x, const LatticeVector& y) const;
    // phi = -theta^{-1} psi, the O-valued skew-hermitian companion form.
    Eis skew_product(const LatticeVector& x, const LatticeVector& y) const;

    // Even symmetric matrix of (x.y) = (1/3)(psi + conj psi) in the Z-basis
    // b1, w*b1, b2, w*b2, ...
    IMat underlying_integral_form() const;

    Inertia signature() const;
    int64_t discriminant() const;
    bool is_positive_definite() const;

  private:
    explicit HermitianLattice(EMat g);
};

// --- standard lattices ------------------------------------------------------

// Lambda^k: 3 on the diagonal, theta on the superdiagonal.
LatticePtr lambda_lattice(size_t k);
// Hyperbolic plane over O with basis (e, f), psi(e,f) = theta.
LatticePtr hyperbolic_lattice();
// Lambda = Lambda^4 _|_ Lambda^4 _|_ H, basis r1'..r4', r1''..r4'', e, f.
LatticePtr big_lambda_lattice();
// Lambda^4 _|_ Lambda^4 (used by the rank-8 cusp computations).
LatticePtr lambda4_perp_lambda4();

// The unitary identification Lambda^10 -> Lambda' _|_ Lambda'' _|_ H.
// images[i] is the image of the i-th chain basis vector; s is the auxiliary
// vector of Lambda'' with psi(s, r_i'') = 0 (i <= 3), psi(s, r_4'') = theta.
struct BigLambdaBasis {
    LatticePtr lambda10;
    LatticePtr frame;  // Lambda' _|_ Lambda'' _|_ H
    std::vector<LatticeVector> images;
    LatticeVector s;
};
BigLambdaBasis big_lambda_basis();

// Named-lattice lookup used by CLI and JSON ("lambda4", "H", "Lambda", ...).
LatticePtr standard_lattice(const std::string& name);

// --- module operations ------------------------------------------------------

// Basis of the saturated orthogonal complement of span(S) in L.
std::vector<LatticeVector> orthogonal_complement(const LatticePtr& L,
                                                 const std::vector<LatticeVector>& S);

// O-span of S as a saturated or raw submodule, via exact Z-linear algebra on
// the rank-2n underlying module.
bool is_primitive(const LatticePtr& L, const std::vector<LatticeVector>& S);
std::vector<LatticeVector> saturation(const LatticePtr& L, const std::vector<LatticeVector>& S);

// Rank of the O-span of S.
size_t span_rank(const std::vector<LatticeVector>& S);

// Gram matrix of a tuple of vectors (all bound to one lattice).
EMat gram_of(const std::vector<LatticeVector>& S);

// True iff x lies in the O-span of S.
bool in_span(const std::vector<LatticeVector>& S, const LatticeVector& x);

// Determinant of the Gram of S; throws unless S is O-independent.
int64_t span_discriminant(const std::vector<LatticeVector>& S);

// Z-coordinate row (a1, b1, ..., an, bn) of a lattice vector.
std::vector<int64_t> z_coords(const LatticeVector& x);
LatticeVector from_z_coords(const LatticePtr& L, const std::vector<int64_t>& z);

}  // namespace eislat
