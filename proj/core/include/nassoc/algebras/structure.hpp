#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nassoc/algebras/algebra.hpp"
#include "nassoc/algebras/identity_check.hpp"
#include "nassoc/algebras/linear.hpp"

namespace nassoc {

// Column i holds the image of e_i.
using LinearMap = MatrixQ;

// The structural operations below need rational constants; parametric
// algebras raise ParametricNotSupported.

struct DerivationAlgebra {
    std::size_t dim = 0;
    std::vector<LinearMap> basis;
};

DerivationAlgebra derivation_algebra(const AlgebraStructure& a);

// D(w(a_1..a_n)) = sum_i w(a_1, .., D a_i, .., a_n) on all basis tuples, for
// the bracketing with shape code `shape` ('n'/'l' preorder) or for every
// bracketing of n arguments.
bool is_leibniz_derivation(const AlgebraStructure& a, const LinearMap& d, int n,
                           const std::optional<std::string>& shape = std::nullopt);

// span{u v : u in U, v in V}.
Subspace product_span(const RationalAlgebra& a, const Subspace& u, const Subspace& v);

struct PowersReport {
    std::vector<Subspace> lower;    // A^1, A^2, ... up to stabilization or 0
    std::vector<Subspace> derived;  // A^(1), A^(2), ...
    bool nilpotent = false;
    bool solvable = false;
    std::optional<int> nilpotency_class;  // least k with A^{k+1} = 0
};

PowersReport powers_and_nilpotency(const AlgebraStructure& a);
Subspace power(const AlgebraStructure& a, int k);
Subspace annihilator(const AlgebraStructure& a);

// Algebra on a product-closed subspace, in the subspace's echelon basis.
AlgebraStructure restrict_to(const AlgebraStructure& a, const Subspace& u);
CheckResult subalgebra_identity_check(const AlgebraStructure& a, int k, const IdentitySystem& sys);

bool is_idempotent(const AlgebraStructure& a, const Element& e);

struct PeirceSplit {
    Subspace a0, a_half, a1;
    bool spans = false;       // dimensions add up to n
    bool half_zero = false;   // A_{1/2} = 0
    bool a0_ideal = false;
    bool a1_ideal = false;
    bool a0a1_zero = false;   // A_0 A_1 = 0
    bool a1a0_zero = false;   // A_1 A_0 = 0
    bool e_commutes = false;  // e x = x e for every x

    bool decomposes() const {
        return spans && half_zero && a0_ideal && a1_ideal && a0a1_zero && a1a0_zero;
    }
};

// Eigenspaces of x -> 1/2 (xe + ex) for 0, 1/2, 1.  NotIdempotent when
// ee != e, NonSplitOperator when they do not span A.
PeirceSplit peirce(const AlgebraStructure& a, const Element& e);

struct Fingerprint {
    std::size_t dim = 0;
    std::size_t dim_square = 0;
    std::size_t dim_cube = 0;
    std::size_t dim_annihilator = 0;
    std::size_t dim_der = 0;
    std::size_t dim_der_plus = 0;
    std::optional<int> nilpotency_class;
    bool commutative = false;
    bool associative = false;
    bool shift_associative = false;
    bool cyclic_associative = false;

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
    std::string to_string() const;
};

Fingerprint fingerprint(const AlgebraStructure& a);

}  // namespace nassoc
