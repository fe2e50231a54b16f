#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nassoc/exact/rational.hpp"

namespace nassoc {

// Power product of named variables; exponents are positive and names sorted.
class Monomial {
public:
    Monomial() = default;
    static Monomial variable(std::string name, unsigned exponent = 1);

    unsigned degree() const;
    bool is_one() const { return powers_.empty(); }
    const std::vector<std::pair<std::string, unsigned>>& powers() const { return powers_; }
    unsigned exponent(std::string_view name) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;
    // Graded lexicographic: total degree first, then exponents compared in
    // alphabetical variable order.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

    std::string to_string() const;

private:
    std::vector<std::pair<std::string, unsigned>> powers_;
};

class PolyQ {
public:
    using Terms = std::map<Monomial, Rational>;

    PolyQ() = default;
    PolyQ(Rational c);  // NOLINT(google-explicit-constructor)
    PolyQ(long c) : PolyQ(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    static PolyQ variable(const std::string& name);

    // Polynomial in any identifiers; "/" only by nonzero constants.
    static PolyQ parse(std::string_view text);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::optional<Rational> as_constant() const;
    Rational coefficient(const Monomial& m) const;
    unsigned total_degree() const;
    std::set<std::string> variables() const;
    const Terms& terms() const { return terms_; }

    PolyQ& operator+=(const PolyQ& o);
    PolyQ& operator-=(const PolyQ& o);
    PolyQ& operator*=(const PolyQ& o);
    PolyQ& operator*=(const Rational& c);
    friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
    friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
    friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
    friend PolyQ operator*(PolyQ a, const Rational& c) { return a *= c; }
    friend PolyQ operator*(const Rational& c, PolyQ a) { return a *= c; }
    PolyQ operator-() const;
    friend bool operator==(const PolyQ&, const PolyQ&) = default;

    PolyQ pow(unsigned e) const;
    PolyQ substitute(const std::map<std::string, PolyQ>& values) const;

    // Evaluates in any commutative ring R constructible from Rational.
    template <class R, class Resolve>
    R evaluate(Resolve&& resolve) const {
        R acc{Rational(0)};
        for (const auto& [m, c] : terms_) {
            R term{c};
            for (const auto& [name, e] : m.powers()) {
                R base = resolve(name);
                for (unsigned i = 0; i < e; ++i) term = term * base;
            }
            acc = acc + term;
        }
        return acc;
    }

    // Leading term first.
    std::string to_string() const;

private:
    void add_term(const Monomial& m, const Rational& c);
    Terms terms_;
};

std::string to_string(const PolyQ& p);

}  // namespace nassoc
