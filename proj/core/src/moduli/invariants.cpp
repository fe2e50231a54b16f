#include "nassoc/moduli/invariants.hpp"

#include <algorithm>

#include "nassoc/algebras/linear.hpp"
#include "nassoc/algebras/structure.hpp"
#include "nassoc/error.hpp"

namespace nassoc {

std::size_t orbit_dim(const AlgebraStructure& a) {
    return a.dim() * a.dim() - derivation_algebra(a).dim;
}

std::size_t family_orbit_dim(const AlgebraStructure& a, const std::map<std::string, Rational>& sample) {
    const std::size_t params = a.used_parameters().size();
    AlgebraStructure s = a.specialize(sample);
    if (s.is_parametric()) throw ParametricNotSupported("sample leaves parameters of " + a.name() + " unset");
    return orbit_dim(s) + params;
}

bool NecessaryConditions::admissible() const {
    return proper && std::all_of(checks.begin(), checks.end(), [](const InvariantCheck& c) { return c.passes; });
}

NecessaryConditions degeneration_necessary(const AlgebraStructure& a, const AlgebraStructure& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("degeneration between algebras of different dimension");
    NecessaryConditions out;
    const Fingerprint fa = fingerprint(a), fb = fingerprint(b);
    out.proper = !(fa == fb);
    out.checks.push_back({"derivations", "dim Der(A) = " + std::to_string(fa.dim_der) + " < dim Der(B) = " +
                                             std::to_string(fb.dim_der),
                          fa.dim_der < fb.dim_der});
    out.checks.push_back({"square", "dim A^2 = " + std::to_string(fa.dim_square) + " >= dim B^2 = " +
                                        std::to_string(fb.dim_square),
                          fa.dim_square >= fb.dim_square});
    const bool a_nil = fa.nilpotency_class.has_value(), b_nil = fb.nilpotency_class.has_value();
    out.checks.push_back({"nilpotency", std::string("A ") + (a_nil ? "nilpotent" : "not nilpotent") + ", B " +
                                            (b_nil ? "nilpotent" : "not nilpotent"),
                          !a_nil || b_nil});
    return out;
}

Rational pencil_invariant(const AlgebraStructure& alg) {
    const RationalAlgebra a(alg);
    if (a.dim() != 3) throw ShapeMismatch("pencil invariant needs a 3-dimensional algebra");
    const Subspace all = Subspace::whole(3);
    const Subspace sq = product_span(a, all, all);
    if (sq.dim() != 1) throw ShapeMismatch("pencil invariant needs dim A^2 = 1");
    if (!product_span(a, all, sq).is_zero() || !product_span(a, sq, all).is_zero())
        throw ShapeMismatch("pencil invariant needs a 2-step nilpotent algebra");
    const VectorQ& z = sq.basis().front();  // z[pivot] = 1
    const std::size_t p = sq.pivots().front();
    std::vector<std::size_t> comp;
    for (std::size_t j = 0; j < 3; ++j)
        if (j != p) comp.push_back(j);
    // Products of complement vectors are multiples of z; read them at the pivot.
    Rational b[2][2];
    for (std::size_t x = 0; x < 2; ++x)
        for (std::size_t y = 0; y < 2; ++y) b[x][y] = a.constant(comp[x], comp[y], p) / z[p];
    const Rational kappa = (b[0][1] - b[1][0]) * Rational(1, 2);
    if (kappa.is_zero()) throw ShapeMismatch("pencil invariant needs a nonzero antisymmetric part");
    const Rational s01 = (b[0][1] + b[1][0]) * Rational(1, 2);
    const Rational det_s = b[0][0] * b[1][1] - s01 * s01;
    return det_s / (kappa * kappa);
}

}  // namespace nassoc
