#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "nassoc/algebras/algebra.hpp"

namespace nassoc {

// n^2 - dim Der(A); parameters must be specialized.
std::size_t orbit_dim(const AlgebraStructure& a);

// Dimension of the union of orbits of a family: the orbit dimension at the
// sample plus the number of parameters the constants actually use.  Assumes
// distinct parameter values give non-isomorphic algebras (for the 2-step
// families this is what pencil_invariant certifies).
std::size_t family_orbit_dim(const AlgebraStructure& a, const std::map<std::string, Rational>& sample);

struct InvariantCheck {
    std::string name;
    std::string detail;
    bool passes = false;
};

struct NecessaryConditions {
    bool proper = false;  // the algebras are distinguishable by fingerprint
    std::vector<InvariantCheck> checks;

    bool admissible() const;
};

// Advisory necessary conditions for A -> B: dim Der(A) < dim Der(B),
// dim A^2 >= dim B^2, A nilpotent implies B nilpotent.
NecessaryConditions degeneration_necessary(const AlgebraStructure& a, const AlgebraStructure& b);

// For a 3-dimensional 2-step nilpotent algebra with dim A^2 = 1 and nonzero
// antisymmetric part: det(S) / kappa^2, where on a complement of A^2 the
// product is (S + kappa J) z.  ShapeMismatch otherwise.
Rational pencil_invariant(const AlgebraStructure& a);

}  // namespace nassoc
