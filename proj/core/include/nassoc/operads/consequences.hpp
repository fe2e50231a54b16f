#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nassoc/exact/series.hpp"
#include "nassoc/exact/sparse.hpp"
#include "nassoc/operads/multilinear_space.hpp"
#include "nassoc/terms/expr.hpp"

namespace nassoc {

// Degree-n part of the operadic ideal generated by an identity system, as a
// reduced row echelon basis inside MultilinearSpace(n).
class ConsequenceSpace {
public:
    ConsequenceSpace(int degree, EchelonBasis basis);

    int degree() const { return space_.degree(); }
    const MultilinearSpace& space() const { return space_; }
    std::size_t ambient_dim() const { return space_.dim(); }
    std::size_t dim() const { return basis_.rank(); }
    std::size_t codim() const { return ambient_dim() - dim(); }
    const EchelonBasis& basis() const { return basis_; }
    // Non-pivot columns; their words span the quotient.
    const std::vector<std::uint32_t>& free_columns() const { return free_; }

    bool contains(const SparseVec& v) const { return basis_.contains(v); }
    bool contains(const Expr& e) const { return contains(space_.to_vector(e)); }
    // Reduction of v modulo the space, supported on free columns.
    SparseVec residual(const SparseVec& v) const { return basis_.reduce(v); }
    // Residual of a single word column.
    SparseVec residual_of_column(std::uint32_t col) const;

    std::vector<Expr> rows_as_exprs() const;
    bool same_subspace(const ConsequenceSpace& o) const;

private:
    MultilinearSpace space_;
    EchelonBasis basis_;
    std::vector<std::uint32_t> free_;
};

using ConsequenceSpacePtr = std::shared_ptr<const ConsequenceSpace>;

// NotMultilinear unless every identity is multilinear; DegreeTooLarge above
// the cap.  Results are cached per system text and degree.
ConsequenceSpacePtr consequences(const IdentitySystem& sys, int n);
std::size_t multilinear_dim(const IdentitySystem& sys, int n);

struct VarietyProfile {
    std::string system;
    std::vector<std::size_t> dims;  // dims[n-1] = dim P(n)
    SeriesQ series;
};

VarietyProfile profile(const IdentitySystem& sys, int N);
// Signed exponential series: coefficient of t^n is (-1)^n dim P(n) / n!.
SeriesQ hilbert(const IdentitySystem& sys, int N);
SeriesQ koszulity_residual(const IdentitySystem& p, const IdentitySystem& q, int N);

// consequences(b, n) is contained in consequences(a, n).
bool implies(const IdentitySystem& a, const IdentitySystem& b, int n);
// Every homogeneous component of e (polarized if not multilinear) lies in
// the consequence space of its degree.
bool prove_zero(const Expr& e, const IdentitySystem& sys);
// Smallest k in 3..kmax with a one-dimensional component in which every
// monomial equals the same basis word.  k starts at 3 because degree 2 has
// a single bracketing.
std::optional<int> nice_index(const IdentitySystem& sys, int kmax);

// Drops cached consequence spaces.
void clear_consequence_cache();

}  // namespace nassoc
