#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "nassoc/exact/matrix.hpp"

namespace nassoc {

// Subspace of Q^n stored by its reduced row echelon basis.
class Subspace {
public:
    explicit Subspace(std::size_t ambient = 0) : n_(ambient) {}
    static Subspace span(std::size_t ambient, const std::vector<VectorQ>& vectors);
    static Subspace whole(std::size_t ambient);
    // Null space of m (a subspace of Q^{m.cols()}).
    static Subspace kernel(const MatrixQ& m);

    std::size_t ambient() const { return n_; }
    std::size_t dim() const { return basis_.size(); }
    bool is_zero() const { return basis_.empty(); }
    const std::vector<VectorQ>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(std::span<const Rational> v) const;
    bool contains(const Subspace& other) const;
    // Coefficients of v in basis(); v must lie in the subspace.
    VectorQ coordinates(std::span<const Rational> v) const;
    // Component of v supported off the pivot columns (v modulo the subspace).
    VectorQ reduce(std::span<const Rational> v) const;

    friend Subspace operator+(const Subspace& a, const Subspace& b);
    friend Subspace intersect(const Subspace& a, const Subspace& b);
    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.n_ == b.n_ && a.basis_ == b.basis_;
    }

    std::string to_string() const;

private:
    std::size_t n_;
    std::vector<VectorQ> basis_;
    std::vector<std::size_t> pivots_;
};

}  // namespace nassoc
