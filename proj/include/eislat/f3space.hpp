#pragma once

#include <array>
#include <vector>

#include "eislat/eisenstein.hpp"
#include "eislat/lattice.hpp"

namespace eislat {

// Small exact geometry of the symplectic F3^4 = Lambda^4 mod theta.
// Used both by the classification code and as an independent oracle.

using F3Vec4 = std::array<F3, 4>;

F3Vec4 reduce_vector_mod_theta(const LatticeVector& x);  // rank-4 lattices

// Symplectic product on F3^4 induced by phi (for the Lambda^4 Gram).
F3 symplectic_product(const LatticePtr& L, const F3Vec4& x, const F3Vec4& y);

bool f3_is_zero(const F3Vec4& x);
bool f3_equal_projectively(const F3Vec4& x, const F3Vec4& y);  // same line

// All 80 nonzero vectors, in a fixed order.
std::vector<F3Vec4> f3_nonzero_vectors();

// All 40 lines, each given by its canonical representative (first nonzero
// coordinate equal to 1).
std::vector<F3Vec4> f3_lines();

// Index of the line through v in f3_lines().
size_t f3_line_id(const F3Vec4& v);

// A plane is an unordered set of 4 lines; canonical form = sorted list of
// the 4 line representatives. Returns all 130 planes as index pairs into
// f3_lines(), plus a nondegeneracy flag per plane.
struct F3Plane {
    std::array<F3Vec4, 2> basis;
    std::vector<size_t> line_ids;  // 4 lines, sorted
    bool nondegenerate = false;
};
std::vector<F3Plane> f3_planes(const LatticePtr& L);

}  // namespace eislat
