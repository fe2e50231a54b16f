#pragma once

#include <string>
#include <string_view>

#include "nassoc/exact/sparse.hpp"
#include "nassoc/terms/expr.hpp"

namespace nassoc {

// Binary quadratic operad: an S_3-stable relation subspace of the 12-dim
// degree-3 multilinear space, in reduced row echelon form.
class OperadPresentation {
public:
    OperadPresentation();
    explicit OperadPresentation(const std::vector<SparseVec>& relations);

    std::size_t dim() const { return basis_.rank(); }
    const EchelonBasis& relations() const { return basis_; }
    std::vector<Expr> relation_exprs() const;
    bool contains(const SparseVec& v) const { return basis_.contains(v); }

    friend bool operator==(const OperadPresentation& a, const OperadPresentation& b) {
        return a.basis_.rows() == b.basis_.rows();
    }

private:
    EchelonBasis basis_;
};

// NotQuadratic unless every identity is multilinear of degree 3.
OperadPresentation presentation_of(const IdentitySystem& sys);
// Lie-admissibility dual: expand the cyclic Jacobi sum of brackets on S (x) U
// with (a(x)u)(b(x)v) = ab (x) uv, reduce the S-side modulo R to a quotient
// basis, and collect the U-side coefficients (closed under relabelling).
OperadPresentation koszul_dual(const OperadPresentation& p);
IdentitySystem system_from_presentation(const OperadPresentation& p, std::string name);
IdentitySystem dual_system(const IdentitySystem& sys);

// Built-in name, DSL path, or either followed by "!" for its Koszul dual.
IdentitySystem resolve_system(std::string_view spec);

}  // namespace nassoc
