#pragma once

#include <array>

#include "eislat/lattice.hpp"
#include "eislat/unitary.hpp"

namespace eislat {

// The rank-10 module A_O = O[eta]/(sum eta^i, sum (omega eta)^i) carrying the
// homology of the degree-6 cyclic cover of the line branched at 12 points.
// eta has order 12; the deck generator tau acts as the scalar omega.

// A formal O-combination sum c_i eta^i (i mod 12) applied to the cycle e.
struct EtaPolynomial {
    std::array<Eis, 12> c{};

    static EtaPolynomial monomial(int k, const Eis& coef = Eis{1});
    friend EtaPolynomial operator+(const EtaPolynomial& x, const EtaPolynomial& y);
    friend EtaPolynomial operator-(const EtaPolynomial& x, const EtaPolynomial& y);
    friend EtaPolynomial operator*(const Eis& s, const EtaPolynomial& x);
    EtaPolynomial eta_shift(int k) const;  // multiply by eta^k
};

// Coordinates in the O-basis r_1..r_10, r_i = image of (omega*eta)^i.
using PhamVector = std::vector<Eis>;  // length 10

// The aggregate form Psi(x, y) = sum_i psi(x, eta^i y) eta^i.
using AggregateForm = std::array<Eis, 12>;

// psi(e, eta^i e): 3, -1-omega, 0, ..., 0, -1-omega^{-1}.
Eis psi_table(int i);

// Sesquilinear form on representatives (well-defined on classes).
Eis pham_form(const EtaPolynomial& x, const EtaPolynomial& y);
AggregateForm aggregate_form(const EtaPolynomial& x, const EtaPolynomial& y);

// Image in the r-basis; O-linear with kernel exactly the two relations.
PhamVector reduce_to_basis(const EtaPolynomial& p);

// The Hermitian lattice carried by (r_1, ..., r_10).
LatticePtr pham_lattice();
EMat gram_in_r_basis();

// Diagonal units u_1..u_10 with r_i -> u_i r_i carrying the Gram to the
// standard Lambda^10 Gram; throws if no such rescaling exists.
std::vector<Eis> unit_normalize_to_lambda10();

// Multiplication by eta as a unitary map of the Pham lattice.
UnitaryMap eta_map();

// The braid monodromy operator T_k = eta^k T_0 eta^{-k}, the complex
// reflection x -> x + omega^{-1} theta^{-1} psi(x, eta^k e) eta^k e.
UnitaryMap monodromy_T(int k);

struct BraidReport {
    bool t_cubed_identity = true;
    bool braid_relations = true;
    bool distant_commutations = true;
    bool r_is_tau_eta = true;       // T_1...T_11 = omega * eta
    bool r_star_is_eta_inverse = true;  // T_11...T_1 = eta^{-1}
    bool r_rstar_is_omega = true;
    bool r_star_order_12 = true;
    bool all() const {
        return t_cubed_identity && braid_relations && distant_commutations && r_is_tau_eta &&
               r_star_is_eta_inverse && r_rstar_is_omega && r_star_order_12;
    }
};
BraidReport verify_braid_and_R();

// u = reduce(sum (-eta)^i) and the 6-vector z with u = 2 theta z.
struct EisensteinImage {
    PhamVector u;
    PhamVector z;
    int64_t norm_u = 0;  // 72
    int64_t norm_z = 0;  // 6
    bool u_equals_2theta_z = false;
};
EisensteinImage eisenstein_image();

struct IsotropicL0Report {
    bool l0_isotropic = false;
    bool perp_to_non5_powers = false;  // psi(l0, eta^i e) = 0 for i != 5 mod 6
    bool pairs_with_eta5 = false;      // psi(l0, eta^5 e) != 0
    bool all() const { return l0_isotropic && perp_to_non5_powers && pairs_with_eta5; }
};
IsotropicL0Report isotropic_l0_check();

// The free rank-50 module carrying the first homology of the cover: the
// torsion-free quotient of Z[tau, eta]/(sum tau^i, sum eta^i, sum (tau eta)^i).
// (The raw 72-monomial presentation has a finite cyclic factor, recorded in
// presentation_torsion; the homology identification factors through the
// torsion-free part, where the pairing and the monodromy live.)
// reduction maps monomial coordinates to free-basis coordinates, sections
// picks a monomial-coordinate representative per basis element;
// reduction * sections^T is the identity.
struct IntegralPhamModule {
    size_t rank = 0;  // 50
    IMat monodromy;   // integral T on the free basis
    IMat eta;         // multiplication by eta (order 12)
    IMat tau;         // multiplication by tau (order 6)
    IMat reduction;   // rank x 72
    IMat sections;    // rank x 72
    std::vector<int64_t> presentation_torsion;  // nontrivial invariant factors
    // pairing of two basis elements, as a 72-coefficient group-ring value
    std::vector<int64_t> pairing(size_t i, size_t j) const;
};
// Note: the braid relations and the rotation identities hold integrally, and
// T^3 is nontrivial, but T itself is NOT of finite order on the rank-50
// module: T^6 = 1 + N with N of rank one and N^2 = 0 (a transvection living
// in the character where tau acts by -1). Only the omega-isotypic part
// carries a finite (order 3) reflection.
IntegralPhamModule integral_pham_module();

// Group-ring helpers for R = Z[C6 x C12] (coefficient index a*12+b).
std::vector<int64_t> group_ring_mul(const std::vector<int64_t>& x, const std::vector<int64_t>& y);
std::vector<int64_t> group_ring_conj(const std::vector<int64_t>& x);

}  // namespace eislat
