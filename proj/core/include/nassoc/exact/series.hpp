#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nassoc/exact/rational.hpp"

namespace nassoc {

// Truncated power series c_1 t + ... + c_N t^N (no constant term).
class SeriesQ {
public:
    SeriesQ() = default;
    explicit SeriesQ(std::size_t order) : c_(order, Rational(0)) {}
    explicit SeriesQ(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {}
    static SeriesQ t(std::size_t order);

    std::size_t order() const { return c_.size(); }
    // Coefficient of t^k, k in 1..order.
    const Rational& operator[](std::size_t k) const { return c_.at(k - 1); }
    Rational& operator[](std::size_t k) { return c_.at(k - 1); }
    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const;

    friend SeriesQ operator+(const SeriesQ& a, const SeriesQ& b);
    friend SeriesQ operator-(const SeriesQ& a, const SeriesQ& b);
    friend bool operator==(const SeriesQ&, const SeriesQ&) = default;

    // "-t + t^2 - t^3 + 1/2*t^4 - 1/120*t^5"; "0" when all coefficients vanish.
    std::string to_string() const;

private:
    std::vector<Rational> c_;
};

// f(g(t)) mod t^{N+1}; TruncationMismatch unless both have order N.
SeriesQ compose_series(const SeriesQ& f, const SeriesQ& g);

}  // namespace nassoc
