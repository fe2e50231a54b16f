#include "nassoc/exact/ratfun.hpp"

#include "nassoc/error.hpp"
#include "nassoc/exact/arith_parser.hpp"

namespace nassoc {

UPoly::UPoly(Rational c) {
    if (!c.is_zero()) c_.push_back(std::move(c));
}

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::t() { return UPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational UPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j].addmul(a.c_[i], b.c_[j]);
    return UPoly(std::move(c));
}

UPoly operator*(UPoly a, const Rational& s) {
    for (auto& x : a.c_) x *= s;
    a.trim();
    return a;
}

UPoly UPoly::operator-() const {
    UPoly out = *this;
    for (auto& x : out.c_) x = -x;
    return out;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.degree() < b.degree()) return {UPoly{}, a};
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    std::vector<Rational> r = a.c_;
    const Rational lead_inv = b.leading().inverse();
    const std::size_t db = b.c_.size() - 1;
    for (std::size_t k = q.size(); k-- > 0;) {
        Rational f = r[k + db] * lead_inv;
        q[k] = f;
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j <= db; ++j) r[k + j].submul(f, b.c_[j]);
    }
    return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly UPoly::monic() const {
    if (is_zero()) return {};
    return *this * leading().inverse();
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::string UPoly::to_string(std::string_view var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const Rational& c = c_[k];
        if (c.is_zero()) continue;
        bool neg = c.sign() < 0;
        Rational a = c.abs();
        std::string mono = k == 0 ? "" : (k == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(k));
        std::string body;
        if (k == 0) body = a.to_string();
        else if (a.is_one()) body = mono;
        else body = a.to_string() + "*" + mono;
        if (out.empty()) out = neg ? "-" + body : body;
        else out += (neg ? " - " : " + ") + body;
    }
    return out;
}

RatFunT::RatFunT(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    normalize();
}

RatFunT RatFunT::t() { return RatFunT(UPoly::t(), UPoly(Rational(1))); }

void RatFunT::normalize() {
    if (num_.is_zero()) {
        den_ = UPoly(Rational(1));
        return;
    }
    UPoly g = UPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = UPoly::divmod(num_, g).first;
        den_ = UPoly::divmod(den_, g).first;
    }
    Rational lc = den_.leading();
    if (!lc.is_one()) {
        Rational inv = lc.inverse();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

namespace {
struct RatFunOps {
    const std::map<std::string, Rational>* constants;
    RatFunT constant(const Rational& c) const { return RatFunT(c); }
    RatFunT variable(const std::string& name, std::size_t pos) const {
        if (name == "t") return RatFunT::t();
        auto it = constants->find(name);
        if (it == constants->end()) throw ParseError("unknown symbol '" + name + "'", pos);
        return RatFunT(it->second);
    }
    RatFunT divide(const RatFunT& a, const RatFunT& b, std::size_t pos) const {
        if (b.is_zero()) throw ParseError("division by zero", pos);
        return a / b;
    }
};
}  // namespace

RatFunT RatFunT::parse(std::string_view text, const std::map<std::string, Rational>& constants) {
    return detail::parse_arith<RatFunT>(text, RatFunOps{&constants});
}

Rational RatFunT::value_at_zero() const {
    Rational d0 = den_.coeff(0);
    if (d0.is_zero()) throw PoleAtZero("pole at t = 0 in " + to_string());
    return num_.coeff(0) / d0;
}

Rational RatFunT::eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d.is_zero()) throw DivisionByZero("pole at t = " + x.to_string());
    return num_.eval(x) / d;
}

RatFunT operator+(const RatFunT& a, const RatFunT& b) {
    if (a.den_ == b.den_) return RatFunT(a.num_ + b.num_, a.den_);
    return RatFunT(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunT operator-(const RatFunT& a, const RatFunT& b) { return a + (-b); }

RatFunT operator*(const RatFunT& a, const RatFunT& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return RatFunT(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunT operator/(const RatFunT& a, const RatFunT& b) {
    if (b.is_zero()) throw DivisionByZero("rational function division by zero");
    return RatFunT(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunT RatFunT::operator-() const {
    RatFunT out = *this;
    out.num_ = -out.num_;
    return out;
}

std::string RatFunT::to_string() const {
    if (den_.degree() == 0) return num_.to_string();
    auto wrap = [](const UPoly& p) {
        std::string s = p.to_string();
        return s.find(' ') == std::string::npos ? s : "(" + s + ")";
    };
    return wrap(num_) + "/" + wrap(den_);
}

Rational limit_at_zero(const RatFunT& f) { return f.value_at_zero(); }
std::string to_string(const RatFunT& f) { return f.to_string(); }

}  // namespace nassoc
