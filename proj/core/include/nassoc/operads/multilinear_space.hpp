#pragma once

#include <cstddef>
#include <cstdint>

#include "nassoc/exact/sparse.hpp"
#include "nassoc/terms/expr.hpp"

namespace nassoc {

// Degrees above this need NASSOC_DEGREE_CAP (at most 8).
inline constexpr int kDefaultDegreeCap = 6;
inline constexpr int kMaxDegree = 8;

// Current cap: NASSOC_DEGREE_CAP if set (clamped to kMaxDegree), else 6.
int degree_cap();
// DegreeTooLarge unless 1 <= n <= degree_cap().
void check_degree(int n);

// Degree-n multilinear component of the free magma.  Column of a word =
// shape index * n! + lexicographic rank of its leaf permutation.
class MultilinearSpace {
public:
    explicit MultilinearSpace(int n);

    int degree() const { return n_; }
    std::size_t dim() const { return dim_; }
    std::size_t num_shapes() const { return shapes_; }

    std::uint32_t column(const Word& w) const;
    Word word(std::uint32_t column) const;

    // NotMultilinear unless every term is a word on exactly x1..xn.
    SparseVec to_vector(const Expr& e) const;
    Expr to_expr(const SparseVec& v) const;

private:
    int n_;
    std::size_t shapes_;
    std::size_t fact_;
    std::size_t dim_;
};

std::size_t multilinear_space_dim(int n);

}  // namespace nassoc
