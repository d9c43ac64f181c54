#pragma once

#include "eislat/f3space.hpp"
#include "eislat/lattice.hpp"
#include "eislat/shortvec.hpp"
#include "eislat/unitary.hpp"

namespace eislat {

// Discriminant class of the primitive rank-2 lattice spanned by a 6-vector
// and a 3-vector.
enum class Rank2Type { d6 = 6, d9 = 9, d15 = 15, d18 = 18 };

// The five relative positions of (3-vector, 6-vector) pairs in Lambda^4.
enum class RelativePosition { a, b, c, d, e };

// The two orbit types of primitive isotropic lines perpendicular to the
// fixed 6-vector z_o, detected by the norm split over Lambda' _|_ Lambda''.
enum class IsotropicType { theta, zero };

const char* to_string(Rank2Type t);
const char* to_string(RelativePosition p);
const char* to_string(IsotropicType t);

// Flag (v, P) in F3^4: a nonzero vector inside a nondegenerate plane.
struct Flag {
    F3Vec4 v;
    std::vector<size_t> plane_line_ids;  // canonical plane key (4 sorted line ids)
    friend bool operator==(const Flag& x, const Flag& y) {
        return x.v == y.v && x.plane_line_ids == y.plane_line_ids;
    }
    friend bool operator<(const Flag& x, const Flag& y);
};

// Discriminant of the span of {z, r}; requires the span to be positive
// definite and primitive. An imprimitive span is reported as an error.
Rank2Type rank2_type(const LatticePtr& L, const LatticeVector& z, const LatticeVector& r);

RelativePosition relative_position(const LatticeVector& r, const LatticeVector& z);

// The three ordered pairs (r1, r2) with r1 + r2 = z and psi(r1, r2) = theta,
// plus the common rank-2 sublattice L_z they span.
struct ThetaDecomposition {
    std::vector<std::pair<LatticeVector, LatticeVector>> pairs;
    std::vector<LatticeVector> lz_basis;  // saturated rank-2 sublattice
};
ThetaDecomposition theta_decompositions(const LatticeVector& z,
                                        const std::vector<LatticeVector>& three_vectors);

// The flag attached to a 6-vector: (z mod theta, L_z mod theta).
Flag flag_of(const LatticeVector& z, const std::vector<LatticeVector>& three_vectors);

// The four unordered pairs {r, z - r} of perpendicular 3-vectors summing to z.
std::vector<std::pair<LatticeVector, LatticeVector>> perpendicular_decompositions(
    const LatticeVector& z, const std::vector<LatticeVector>& three_vectors);

// Type of data in the standard frame Lambda' _|_ Lambda'' _|_ H with the
// isotropic line spanned by e: z_o perpendicular to e with psi(z_o,z_o)=6.
IsotropicType isotropic_line_type(const LatticeVector& z_o_frame);

// Cusp profile for the two isotropic types.
struct DClassProfile {
    size_t rank_i6 = 0;       // rank of I(6)/I
    size_t rank_i9 = 0;       // rank of I(9)/I
    size_t nine_lines = 0;    // rank-one sublattices spanned by d-invariant-9 images
    size_t pool_size = 0;     // 3-vectors of Lambda' _|_ Lambda'' examined
    bool perpendicular = false;  // I(6)/I perp I(9)/I
};
DClassProfile dclass_profile(IsotropicType type);

// Classification of a positive definite primitive sublattice spanned by the
// standard z_o and 3-vectors of d-invariant 6 or 9, against five models.
struct SpanType {
    std::string tag;  // "(6)", "(9)", "(6,9)", "(9,9)", "(6,9,9)"
    size_t complement_rank = 0;
    Inertia complement_signature;
    int64_t complement_discriminant = 0;
};
SpanType span_type_with_zo(const std::vector<LatticeVector>& rs);

// Standard z_o = r1' + r2' in the big frame lattice.
LatticeVector standard_zo();

}  // namespace eislat
