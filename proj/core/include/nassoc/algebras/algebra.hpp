#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nassoc/exact/matrix.hpp"
#include "nassoc/exact/poly.hpp"

namespace nassoc {

// Coordinates in the algebra's basis, over the parameter ring.
using Element = std::vector<PolyQ>;

Element add(const Element& a, const Element& b);
Element subtract(const Element& a, const Element& b);
Element scaled(const Element& a, const PolyQ& c);
bool is_zero(const Element& a);
std::string to_string(const Element& a, std::span<const std::string> basis);

// Finite-dimensional algebra e_i e_j = sum_k c_ij^k e_k with constants in
// Q[parameters].  Indices are 0-based.
class AlgebraStructure {
public:
    AlgebraStructure(std::string name, std::size_t dim, std::vector<std::string> parameters = {},
                     std::vector<std::string> basis = {});

    const std::string& name() const { return name_; }
    std::size_t dim() const { return n_; }
    const std::vector<std::string>& basis() const { return basis_; }
    const std::vector<std::string>& parameters() const { return params_; }

    const Element& product(std::size_t i, std::size_t j) const;
    const PolyQ& constant(std::size_t i, std::size_t j, std::size_t k) const {
        return product(i, j)[k];
    }
    // Constants must only mention declared parameters.
    void set_product(std::size_t i, std::size_t j, Element value);

    Element multiply(const Element& x, const Element& y) const;
    Element basis_element(std::size_t i) const;
    Element zero_element() const { return Element(n_); }
    std::size_t basis_index(std::string_view label) const;
    // Linear combination of basis labels, e.g. "e1 + alpha*e2".
    Element parse_element(std::string_view text) const;

    // Some constant is a non-constant polynomial.
    bool is_parametric() const;
    std::set<std::string> used_parameters() const;
    AlgebraStructure specialize(const std::map<std::string, Rational>& values) const;
    AlgebraStructure renamed(std::string name) const;

    // Corpus metadata: systems the algebra is claimed to satisfy and
    // idempotents printed with it.
    const std::vector<std::string>& claims() const { return claims_; }
    void set_claims(std::vector<std::string> c) { claims_ = std::move(c); }
    const std::vector<Element>& idempotents() const { return idempotents_; }
    void set_idempotents(std::vector<Element> e);
    const std::string& description() const { return description_; }
    void set_description(std::string d) { description_ = std::move(d); }

    // Multiplication table, one "e_i e_j = ..." line per nonzero product.
    std::string table() const;

    friend bool operator==(const AlgebraStructure& a, const AlgebraStructure& b) {
        return a.n_ == b.n_ && a.c_ == b.c_;
    }

private:
    void check_element(const Element& e) const;

    std::string name_;
    std::size_t n_;
    std::vector<std::string> params_;
    std::vector<std::string> basis_;
    std::vector<Element> c_;  // n*n products, row-major in (i, j)
    std::vector<std::string> claims_;
    std::vector<Element> idempotents_;
    std::string description_;
};

// Dense rational view used by the structural operations.
class RationalAlgebra {
public:
    // ParametricNotSupported when a constant is not a rational number.
    explicit RationalAlgebra(const AlgebraStructure& a);

    std::size_t dim() const { return n_; }
    const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[(i * n_ + j) * n_ + k];
    }
    VectorQ multiply(std::span<const Rational> x, std::span<const Rational> y) const;
    VectorQ basis_element(std::size_t i) const;
    // Matrices of y -> x y and y -> y x (columns are images of basis vectors).
    MatrixQ left_multiplication(std::span<const Rational> x) const;
    MatrixQ right_multiplication(std::span<const Rational> x) const;
    // y -> 1/2 (x y + y x).
    MatrixQ jordan_multiplication(std::span<const Rational> x) const;

private:
    std::size_t n_;
    std::vector<Rational> c_;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> sparse_;  // per (i, j)
};

VectorQ to_rational(const Element& e);
Element to_element(std::span<const Rational> v);
AlgebraStructure algebra_from_constants(std::string name, std::size_t n,
                                        std::span<const Rational> constants);

}  // namespace nassoc
