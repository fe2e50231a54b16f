#pragma once

#include <cstddef>
#include <vector>

#include "nassoc/algebras/algebra.hpp"
#include "nassoc/algebras/identity_check.hpp"

namespace nassoc {

// x o y = 1/2 (xy + yx) and [x, y] = 1/2 (xy - yx).
AlgebraStructure plus_algebra(const AlgebraStructure& a);
AlgebraStructure minus_algebra(const AlgebraStructure& a);
AlgebraStructure opposite_algebra(const AlgebraStructure& a);

// x * y = (xp)y - (yq)x.
AlgebraStructure mutation(const AlgebraStructure& a, const Element& p, const Element& q);
// x * y = p(xy) - (px)y - x(py).
AlgebraStructure kantor_square(const AlgebraStructure& a, const Element& p);
// x * y = alpha xy + beta yx; alpha and beta may carry new parameters.
AlgebraStructure scalar_mutation(const AlgebraStructure& a, const PolyQ& alpha, const PolyQ& beta);
// Adjoins a unit "u" as the last basis vector.
AlgebraStructure unital_hull(const AlgebraStructure& a);

// (A, ., *) with both products and their sum shift associative, checked on
// all basis triples through the three defining identities.
CheckResult compatible_check(const AlgebraStructure& dot, const AlgebraStructure& star);

// Symmetric bilinear map theta(e_i, e_j) = theta(e_j, e_i).
class CocycleSpec {
public:
    explicit CocycleSpec(std::size_t n);

    std::size_t dim() const { return n_; }
    const Element& operator()(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, Element value);
    // Adds coefficient * Delta_{i,j} to the k-th component B_k.
    void add_delta(std::size_t k, std::size_t i, std::size_t j, const PolyQ& coefficient);
    // Component B_k written in D<i><j> variables, e.g. "alpha*D11 + D22".
    void add_form(std::size_t k, const PolyQ& form);

private:
    std::size_t n_;
    std::vector<Element> theta_;  // n*n, kept symmetric
};

// x ._theta y = theta(x, y) + [x, y] with the bracket given by an
// anticommutative algebra L.  DimensionMismatch when L is not anticommutative.
AlgebraStructure algebra_from_cocycle(const AlgebraStructure& lie, const CocycleSpec& theta);

}  // namespace nassoc
