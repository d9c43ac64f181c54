#pragma once

#include "eislat/lattice.hpp"

namespace eislat {

// All x with psi(x, x) = n in a positive definite lattice, sorted in the
// canonical (lexicographic coordinate) order. n must be a positive multiple
// of 3. The output is closed under mu_6 and under negation.
std::vector<LatticeVector> vectors_of_norm(const LatticePtr& L, int64_t n);

// One representative per mu_6-orbit (the lexicographic minimum), sorted.
// The input must be closed under mu_6.
std::vector<LatticeVector> unit_orbit_representatives(const std::vector<LatticeVector>& vecs);

}  // namespace eislat
