#include "nassoc/exact/poly.hpp"

#include <algorithm>

#include "nassoc/error.hpp"
#include "nassoc/exact/arith_parser.hpp"

namespace nassoc {

Monomial Monomial::variable(std::string name, unsigned exponent) {
    Monomial m;
    if (exponent > 0) m.powers_.emplace_back(std::move(name), exponent);
    return m;
}

unsigned Monomial::degree() const {
    unsigned d = 0;
    for (const auto& p : powers_) d += p.second;
    return d;
}

unsigned Monomial::exponent(std::string_view name) const {
    for (const auto& [n, e] : powers_)
        if (n == name) return e;
    return 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    auto i = a.powers_.begin(), j = b.powers_.begin();
    while (i != a.powers_.end() || j != b.powers_.end()) {
        if (j == b.powers_.end() || (i != a.powers_.end() && i->first < j->first)) {
            out.powers_.push_back(*i++);
        } else if (i == a.powers_.end() || j->first < i->first) {
            out.powers_.push_back(*j++);
        } else {
            out.powers_.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    auto i = a.powers_.begin(), j = b.powers_.begin();
    while (i != a.powers_.end() || j != b.powers_.end()) {
        unsigned ea = 0, eb = 0;
        if (j == b.powers_.end() || (i != a.powers_.end() && i->first < j->first)) {
            ea = (i++)->second;
        } else if (i == a.powers_.end() || j->first < i->first) {
            eb = (j++)->second;
        } else {
            ea = (i++)->second;
            eb = (j++)->second;
        }
        if (ea != eb) return ea <=> eb;
    }
    return std::strong_ordering::equal;
}

std::string Monomial::to_string() const {
    std::string out;
    for (const auto& [n, e] : powers_) {
        if (!out.empty()) out += '*';
        out += n;
        if (e > 1) out += '^' + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

PolyQ::PolyQ(Rational c) {
    if (!c.is_zero()) terms_.emplace(Monomial{}, std::move(c));
}

PolyQ PolyQ::variable(const std::string& name) {
    PolyQ p;
    p.terms_.emplace(Monomial::variable(name), Rational(1));
    return p;
}

namespace {
struct PolyOps {
    PolyQ constant(const Rational& c) const { return PolyQ(c); }
    PolyQ variable(const std::string& name, std::size_t) const { return PolyQ::variable(name); }
    PolyQ divide(const PolyQ& a, const PolyQ& b, std::size_t pos) const {
        auto c = b.as_constant();
        if (!c) throw ParseError("division by a non-constant polynomial", pos);
        if (c->is_zero()) throw ParseError("division by zero", pos);
        return a * c->inverse();
    }
};
}  // namespace

PolyQ PolyQ::parse(std::string_view text) {
    return detail::parse_arith<PolyQ>(text, PolyOps{});
}

bool PolyQ::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

std::optional<Rational> PolyQ::as_constant() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && terms_.begin()->first.is_one()) return terms_.begin()->second;
    return std::nullopt;
}

Rational PolyQ::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

unsigned PolyQ::total_degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

std::set<std::string> PolyQ::variables() const {
    std::set<std::string> out;
    for (const auto& t : terms_)
        for (const auto& p : t.first.powers()) out.insert(p.first);
    return out;
}

void PolyQ::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PolyQ& PolyQ::operator+=(const PolyQ& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

PolyQ& PolyQ::operator*=(const PolyQ& o) { return *this = *this * o; }

PolyQ& PolyQ::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.second *= c;
    return *this;
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
    PolyQ out;
    if (a.is_zero() || b.is_zero()) return out;
    if (auto c = a.as_constant()) return b * *c;
    if (auto c = b.as_constant()) return a * *c;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

PolyQ PolyQ::operator-() const {
    PolyQ out = *this;
    for (auto& t : out.terms_) t.second = -t.second;
    return out;
}

PolyQ PolyQ::pow(unsigned e) const {
    PolyQ out(Rational(1)), base = *this;
    while (e > 0) {
        if (e & 1u) out = out * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return out;
}

PolyQ PolyQ::substitute(const std::map<std::string, PolyQ>& values) const {
    return evaluate<PolyQ>([&](const std::string& name) {
        auto it = values.find(name);
        return it == values.end() ? PolyQ::variable(name) : it->second;
    });
}

std::string PolyQ::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        bool neg = c.sign() < 0;
        Rational a = c.abs();
        std::string body;
        if (m.is_one()) body = a.to_string();
        else if (a.is_one()) body = m.to_string();
        else body = a.to_string() + "*" + m.to_string();
        if (out.empty()) out = neg ? "-" + body : body;
        else out += (neg ? " - " : " + ") + body;
    }
    return out;
}

std::string to_string(const PolyQ& p) { return p.to_string(); }

}  // namespace nassoc
