#include "nassoc/exact/series.hpp"

#include "nassoc/error.hpp"

namespace nassoc {

SeriesQ SeriesQ::t(std::size_t order) {
    SeriesQ s(order);
    if (order > 0) s[1] = Rational(1);
    return s;
}

bool SeriesQ::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

SeriesQ operator+(const SeriesQ& a, const SeriesQ& b) {
    if (a.order() != b.order()) throw TruncationMismatch("series orders differ");
    SeriesQ out = a;
    for (std::size_t i = 0; i < a.c_.size(); ++i) out.c_[i] += b.c_[i];
    return out;
}

SeriesQ operator-(const SeriesQ& a, const SeriesQ& b) {
    if (a.order() != b.order()) throw TruncationMismatch("series orders differ");
    SeriesQ out = a;
    for (std::size_t i = 0; i < a.c_.size(); ++i) out.c_[i] -= b.c_[i];
    return out;
}

std::string SeriesQ::to_string() const {
    std::string out;
    for (std::size_t k = 1; k <= c_.size(); ++k) {
        const Rational& c = c_[k - 1];
        if (c.is_zero()) continue;
        bool neg = c.sign() < 0;
        Rational a = c.abs();
        std::string mono = k == 1 ? "t" : "t^" + std::to_string(k);
        std::string body = a.is_one() ? mono : a.to_string() + "*" + mono;
        if (out.empty()) out = neg ? "-" + body : body;
        else out += (neg ? " - " : " + ") + body;
    }
    return out.empty() ? "0" : out;
}

SeriesQ compose_series(const SeriesQ& f, const SeriesQ& g) {
    if (f.order() != g.order()) throw TruncationMismatch("compose_series needs equal truncation orders");
    const std::size_t N = f.order();
    // power[i] = coefficient of t^i in g^k, i = 0..N.
    std::vector<Rational> power(N + 1, Rational(0)), next(N + 1);
    power[0] = Rational(1);
    SeriesQ out(N);
    for (std::size_t k = 1; k <= N; ++k) {
        std::fill(next.begin(), next.end(), Rational(0));
        for (std::size_t i = 0; i <= N; ++i) {
            if (power[i].is_zero()) continue;
            for (std::size_t j = 1; i + j <= N; ++j) next[i + j].addmul(power[i], g[j]);
        }
        power.swap(next);
        if (f[k].is_zero()) continue;
        for (std::size_t i = 1; i <= N; ++i) out[i].addmul(f[k], power[i]);
    }
    return out;
}

}  // namespace nassoc
