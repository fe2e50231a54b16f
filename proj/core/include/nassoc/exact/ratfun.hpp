#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nassoc/exact/rational.hpp"

namespace nassoc {

// Dense univariate polynomial over Q; coeffs_[i] multiplies t^i.
class UPoly {
public:
    UPoly() = default;
    UPoly(Rational c);  // NOLINT(google-explicit-constructor)
    explicit UPoly(std::vector<Rational> coeffs);
    static UPoly t();

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
    Rational eval(const Rational& x) const;

    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(UPoly a, const Rational& s);
    UPoly operator-() const;
    friend bool operator==(const UPoly&, const UPoly&) = default;

    // Euclidean division; b nonzero.
    static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
    // Monic gcd (zero if both are zero).
    static UPoly gcd(UPoly a, UPoly b);
    UPoly monic() const;

    std::string to_string(std::string_view var = "t") const;

private:
    void trim();
    std::vector<Rational> c_;
};

// Rational function in t, stored reduced with a monic denominator.
class RatFunT {
public:
    RatFunT() : den_(Rational(1)) {}
    RatFunT(Rational c) : num_(std::move(c)), den_(Rational(1)) {}  // NOLINT(google-explicit-constructor)
    RatFunT(long c) : RatFunT(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    RatFunT(UPoly num, UPoly den);
    static RatFunT t();

    // Parses an expression in t; other identifiers are looked up in
    // `constants` (throws ParseError when missing).
    static RatFunT parse(std::string_view text, const std::map<std::string, Rational>& constants = {});

    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    // Value of the reduced function at t = 0; PoleAtZero if the reduced
    // denominator vanishes there.
    Rational value_at_zero() const;
    // Value at a rational t; DivisionByZero at a pole.
    Rational eval(const Rational& x) const;

    friend RatFunT operator+(const RatFunT& a, const RatFunT& b);
    friend RatFunT operator-(const RatFunT& a, const RatFunT& b);
    friend RatFunT operator*(const RatFunT& a, const RatFunT& b);
    friend RatFunT operator/(const RatFunT& a, const RatFunT& b);
    RatFunT operator-() const;
    friend bool operator==(const RatFunT&, const RatFunT&) = default;

    std::string to_string() const;

private:
    void normalize();
    UPoly num_;
    UPoly den_;
};

Rational limit_at_zero(const RatFunT& f);
std::string to_string(const RatFunT& f);

}  // namespace nassoc
