#pragma once

#include <string>

#include "eislat/lattice.hpp"

namespace eislat {

// Parses a vector in the symbolic r-basis syntax, e.g.
//   "r1+w*r2-th*r3", "w^2*r1+r2", "2*r4", "-r1".
// w stands for omega, th for theta; each term carries exactly one basis
// symbol r<k> (1-based). Whitespace is ignored.
LatticeVector parse_vector(const LatticePtr& L, const std::string& text);

// Parses an Eisenstein scalar from the same grammar (no r-symbols), e.g.
// "1+2*w", "-th", "w^4".
Eis parse_scalar(const std::string& text);

}  // namespace eislat
