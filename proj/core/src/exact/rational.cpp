#include "nassoc/exact/rational.hpp"


#include "nassoc/error.hpp"

namespace nassoc {

Rational::Rational(long num, long den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    auto valid_int = [](const std::string& d) {
        std::size_t i = (!d.empty() && (d[0] == '-' || d[0] == '+')) ? 1 : 0;
        if (i >= d.size()) return false;
        for (; i < d.size(); ++i)
            if (d[i] < '0' || d[i] > '9') return false;
        return true;
    };
    auto strip_plus = [](std::string d) { return (!d.empty() && d[0] == '+') ? d.substr(1) : d; };
    if (slash == std::string::npos) {
        if (!valid_int(s)) throw ParseError("invalid rational '" + s + "'", 0);
        return Rational(mpq_class(mpz_class(strip_plus(s))));
    }
    std::string n = s.substr(0, slash), d = s.substr(slash + 1);
    if (!valid_int(n) || !valid_int(d)) throw ParseError("invalid rational '" + s + "'", slash);
    mpz_class den(strip_plus(d));
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    return Rational(mpq_class(mpz_class(strip_plus(n)), den));
}

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return Rational(mpq_class(1) / v_);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero("division by zero");
    v_ /= o.v_;
    return *this;
}

std::size_t Rational::hash() const {
    auto mix = [](std::size_t h, std::size_t x) { return h ^ (x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)); };
    std::size_t h = static_cast<std::size_t>(sign() + 1);
    for (const mpz_class* z : {&v_.get_num(), &v_.get_den()})
        for (std::size_t i = 0; i < mpz_size(z->get_mpz_t()); ++i)
            h = mix(h, mpz_getlimbn(z->get_mpz_t(), static_cast<mp_size_t>(i)));
    return h;
}

void Rational::submul(const Rational& a, const Rational& b) {
    thread_local mpq_class tmp;
    mpq_mul(tmp.get_mpq_t(), a.v_.get_mpq_t(), b.v_.get_mpq_t());
    mpq_sub(v_.get_mpq_t(), v_.get_mpq_t(), tmp.get_mpq_t());
}

void Rational::addmul(const Rational& a, const Rational& b) {
    thread_local mpq_class tmp;
    mpq_mul(tmp.get_mpq_t(), a.v_.get_mpq_t(), b.v_.get_mpq_t());
    mpq_add(v_.get_mpq_t(), v_.get_mpq_t(), tmp.get_mpq_t());
}

std::string to_string(const Rational& r) { return r.to_string(); }

}  // namespace nassoc
