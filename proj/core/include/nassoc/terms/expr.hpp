#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "nassoc/exact/rational.hpp"
#include "nassoc/terms/permutation.hpp"
#include "nassoc/terms/word.hpp"

namespace nassoc {

// Finite Q-linear combination of words, kept in canonical word order.
class Expr {
public:
    using Terms = std::map<Word, Rational>;

    Expr() = default;
    explicit Expr(const Word& w, const Rational& c = Rational(1));
    static Expr var(int i) { return Expr(Word::leaf(i)); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Rational coefficient(const Word& w) const;
    void add(const Word& w, const Rational& c);

    // Common degree of all terms, if any.
    std::optional<int> degree() const;
    std::set<int> variables() const;
    int max_variable() const;
    // Every term uses each variable of variables() exactly once.
    bool is_multilinear() const;

    Expr& operator+=(const Expr& o);
    Expr& operator-=(const Expr& o);
    Expr& operator*=(const Rational& c);
    friend Expr operator+(Expr a, const Expr& b) { return a += b; }
    friend Expr operator-(Expr a, const Expr& b) { return a -= b; }
    friend Expr operator*(Expr a, const Rational& c) { return a *= c; }
    friend Expr operator*(const Rational& c, Expr a) { return a *= c; }
    Expr operator-() const { return *this * Rational(-1); }
    // Bilinear extension of the free product.
    friend Expr operator*(const Expr& a, const Expr& b);
    friend bool operator==(const Expr&, const Expr&) = default;

    // Substitution x_j -> x_{map(j)} (map indexed from 1; entry 0 unused).
    Expr relabel(std::span<const int> map) const;

    // DSL rendering, e.g. "((x1 x2) x3) - (x2 (x3 x1))"; "0" for zero.
    std::string to_string() const;

private:
    Terms terms_;
};

Expr bracket(const Expr& a, const Expr& b);     // 1/2 (ab - ba)
Expr circ(const Expr& a, const Expr& b);        // 1/2 (ab + ba)
Expr associator(const Expr& a, const Expr& b, const Expr& c);  // (ab)c - a(bc)

// Leaf relabelling by the right action x_j -> x_{p^{-1}(j)}, so that the
// 3-cycle 1->2->3->1 takes (x1 x2) x3 to (x3 x1) x2 and
// apply(apply(e, p), q) = apply(e, p * q).
Expr apply_permutation(const Expr& e, const Permutation& p);

// An expression normalised to "= 0" form with contiguous variables 1..k.
struct Identity {
    Expr expr;
    int num_vars = 0;
    std::optional<int> degree;
    std::string source;

    static Identity from_expr(const Expr& e, std::string source = {});
    bool is_multilinear() const { return expr.is_multilinear() && degree && *degree == num_vars; }
    std::string to_string() const { return expr.to_string() + " = 0"; }
};

struct IdentitySystem {
    std::string name;
    std::vector<Identity> identities;

    bool is_multilinear() const;
    int max_degree() const;
};

}  // namespace nassoc
