#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nassoc/algebras/algebra.hpp"
#include "nassoc/exact/matrix.hpp"
#include "nassoc/exact/ratfun.hpp"

namespace nassoc {

using MatrixT = Matrix<RatFunT>;

// Column i holds the coordinates of E_i(t) in the fixed basis; `subst`
// replaces family parameters by functions of t.
struct ParamBasis {
    MatrixT columns;
    std::map<std::string, RatFunT> subst;
};

// Structure constants c'_ij^k(t) of E_i E_j = sum_k c'_ij^k E_k.
class TransformedConstants {
public:
    TransformedConstants(std::size_t n, std::vector<RatFunT> c) : n_(n), c_(std::move(c)) {}
    std::size_t dim() const { return n_; }
    const RatFunT& operator()(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[(i * n_ + j) * n_ + k];
    }

private:
    std::size_t n_;
    std::vector<RatFunT> c_;
};

// c'(t) = P^-1 mu(P x P).  SingularForAllT when det P is identically zero;
// ParametricNotSupported when a parameter has no substitution.
TransformedConstants transform(const AlgebraStructure& a, const ParamBasis& p);

// Exact change of basis by an invertible rational matrix (same column
// convention); DivisionByZero when singular.
AlgebraStructure change_basis(const AlgebraStructure& a, const MatrixQ& p);

struct DegenerationEntry {
    std::size_t i = 0, j = 0, k = 0;  // 0-based
    RatFunT value;
    std::optional<Rational> limit;    // absent at a pole
    Rational expected;
    bool ok = false;
};

struct DegenerationCertificate {
    std::string source;
    std::string target;
    bool verdict = false;
    std::vector<DegenerationEntry> entries;  // every (i, j, k)
    std::string failure;                     // first offending entry, if any
};

// B must be parameter-free.  A pole at 0 is a false verdict, not an error.
DegenerationCertificate degeneration_check(const AlgebraStructure& a, const ParamBasis& p,
                                           const AlgebraStructure& b);
// Substitutes the family parameters, then runs degeneration_check.
DegenerationCertificate family_degeneration_check(const AlgebraStructure& a, const MatrixT& p,
                                                  const std::map<std::string, RatFunT>& subst,
                                                  const AlgebraStructure& b);

// Bases E_i = t^{k_i} e_{sigma(i)} with 0 <= k_i <= max_exponent, searched in
// (permutation, exponent) lexicographic order; both algebras parameter-free.
std::optional<ParamBasis> search_monomial_basis(const AlgebraStructure& a, const AlgebraStructure& b,
                                                int max_exponent = 6);

}  // namespace nassoc
