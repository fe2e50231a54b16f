#include "nassoc/terms/expr.hpp"

#include <algorithm>

#include "nassoc/error.hpp"

namespace nassoc {

Expr::Expr(const Word& w, const Rational& c) { add(w, c); }

Rational Expr::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Expr::add(const Word& w, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::optional<int> Expr::degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = terms_.begin()->first.degree();
    for (const auto& t : terms_)
        if (t.first.degree() != d) return std::nullopt;
    return d;
}

std::set<int> Expr::variables() const {
    std::set<int> out;
    for (const auto& t : terms_) out.insert(t.first.leaves().begin(), t.first.leaves().end());
    return out;
}

int Expr::max_variable() const {
    int m = 0;
    for (const auto& t : terms_)
        for (int v : t.first.leaves()) m = std::max(m, v);
    return m;
}

bool Expr::is_multilinear() const {
    auto vars = variables();
    for (const auto& t : terms_) {
        std::vector<int> l = t.first.leaves();
        std::sort(l.begin(), l.end());
        if (l.size() != vars.size() || !std::equal(l.begin(), l.end(), vars.begin())) return false;
    }
    return true;
}

Expr& Expr::operator+=(const Expr& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

Expr& Expr::operator-=(const Expr& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

Expr& Expr::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.second *= c;
    return *this;
}

Expr operator*(const Expr& a, const Expr& b) {
    Expr out;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) out.add(Word::product(wa, wb), ca * cb);
    return out;
}

Expr Expr::relabel(std::span<const int> map) const {
    Expr out;
    for (const auto& [w, c] : terms_) {
        std::vector<int> l = w.leaves();
        for (int& v : l) {
            if (v >= static_cast<int>(map.size())) throw IndexOutOfRange("relabel map too short");
            v = map[static_cast<std::size_t>(v)];
        }
        out.add(w.with_leaves(std::move(l)), c);
    }
    return out;
}

std::string Expr::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
        bool neg = c.sign() < 0;
        Rational a = c.abs();
        std::string body = a.is_one() ? w.to_string() : a.to_string() + "*" + w.to_string();
        if (out.empty()) out = neg ? "-" + body : body;
        else out += (neg ? " - " : " + ") + body;
    }
    return out;
}

Expr bracket(const Expr& a, const Expr& b) { return (a * b - b * a) * Rational(1, 2); }
Expr circ(const Expr& a, const Expr& b) { return (a * b + b * a) * Rational(1, 2); }
Expr associator(const Expr& a, const Expr& b, const Expr& c) { return (a * b) * c - a * (b * c); }

Expr apply_permutation(const Expr& e, const Permutation& p) {
    if (e.max_variable() > p.size()) throw IndexOutOfRange("permutation does not cover all variables");
    Permutation inv = p.inverse();
    std::vector<int> map(static_cast<std::size_t>(p.size()) + 1, 0);
    for (int j = 1; j <= p.size(); ++j) map[static_cast<std::size_t>(j)] = inv(j);
    return e.relabel(map);
}

Identity Identity::from_expr(const Expr& e, std::string source) {
    Identity id;
    auto vars = e.variables();
    std::vector<int> map(static_cast<std::size_t>(e.max_variable()) + 1, 0);
    int k = 0;
    for (int v : vars) map[static_cast<std::size_t>(v)] = ++k;
    id.expr = e.relabel(map);
    id.num_vars = k;
    id.degree = id.expr.degree();
    id.source = std::move(source);
    return id;
}

bool IdentitySystem::is_multilinear() const {
    return std::all_of(identities.begin(), identities.end(), [](const Identity& i) { return i.is_multilinear(); });
}

int IdentitySystem::max_degree() const {
    int d = 0;
    for (const auto& i : identities)
        for (const auto& t : i.expr.terms()) d = std::max(d, t.first.degree());
    return d;
}

}  // namespace nassoc
