#pragma once

#include <cstdint>

#include "eislat/lattice.hpp"

namespace eislat {

// An isometry of a Hermitian lattice, stored as the matrix whose columns are
// the images of the basis vectors. U* G U = G is checked at construction.
struct UnitaryMap {
    LatticePtr lat;
    EMat m;

    UnitaryMap(LatticePtr l, EMat mat);

    LatticeVector operator()(const LatticeVector& x) const;
    friend UnitaryMap operator*(const UnitaryMap& x, const UnitaryMap& y);
    UnitaryMap inverse() const;
    UnitaryMap power(uint64_t e) const;
    bool is_identity() const;
    friend bool operator==(const UnitaryMap& x, const UnitaryMap& y) { return x.m == y.m; }
    friend bool operator!=(const UnitaryMap& x, const UnitaryMap& y) { return !(x == y); }
    friend bool operator<(const UnitaryMap& x, const UnitaryMap& y);
};

UnitaryMap identity_map(const LatticePtr& L);
UnitaryMap scalar_map(const LatticePtr& L, const Eis& u);

// Order-3 unitary reflection attached to a 3-vector r:
//   s_r(x) = x - omega^{-1} phi(x, r) r,
// identity on r-perp, multiplies r by -omega.
UnitaryMap triflection(const LatticePtr& L, const LatticeVector& r);

// Unipotent isometry attached to an isotropic e and v perp e with
// psi(v,v) in 6Z:
//   T_{e,v}(x) = x + phi(x,e) v + phi(x,v) e + (1/2) phi(v,v) phi(x,e) e.
// The central coefficient is the unique one making the map unitary.
UnitaryMap heisenberg_transvection(const LatticePtr& L, const LatticeVector& e,
                                   const LatticeVector& v);

// Same construction over Q(omega); used to verify the composition law when
// the combined parameter is half-integral.
EQMat heisenberg_transvection_q(const LatticePtr& L, const std::vector<EisQ>& e,
                                const std::vector<EisQ>& v);

// 4x4 matrix over F3 preserving the symplectic form induced on L mod theta.
struct SymplecticMapF3 {
    Mat<F3> m;
    uint32_t key() const;  // packed entries, 2 bits each
    friend bool operator==(const SymplecticMapF3& x, const SymplecticMapF3& y) { return x.m == y.m; }
};

// Entrywise reduction of an isometry of a rank-4 lattice; checks that the
// image preserves the induced symplectic form.
SymplecticMapF3 reduce_map_mod_theta(const UnitaryMap& u);

// Finite group as a BFS closure of generators. Deterministic: generators are
// sorted, elements listed in BFS order.
struct FiniteGroup {
    LatticePtr lat;
    std::vector<EMat> elements;
    size_t order() const { return elements.size(); }
};

// Breadth-first closure; throws if the group exceeds `cap` elements.
FiniteGroup generate_group(std::vector<UnitaryMap> generators, size_t cap);

// BFS closure in the 4x4 symplectic group over F3.
std::vector<uint32_t> generate_group_f3(const std::vector<SymplecticMapF3>& generators, size_t cap);

// Orbit of a seed vector under the generators (deterministic sorted output).
std::vector<LatticeVector> orbit(const std::vector<UnitaryMap>& generators,
                                 const LatticeVector& seed, size_t cap);

// |group| / |orbit|; throws if not divisible (which would be a logic error).
size_t stabilizer_order(const FiniteGroup& g, const std::vector<UnitaryMap>& generators,
                        const LatticeVector& seed);

}  // namespace eislat
