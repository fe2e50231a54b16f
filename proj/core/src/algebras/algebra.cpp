#include "nassoc/algebras/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "nassoc/error.hpp"

namespace nassoc {

Element add(const Element& a, const Element& b) {
    if (a.size() != b.size()) throw DimensionMismatch("element length mismatch");
    Element out = a;
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
    return out;
}

Element subtract(const Element& a, const Element& b) {
    if (a.size() != b.size()) throw DimensionMismatch("element length mismatch");
    Element out = a;
    for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
    return out;
}

Element scaled(const Element& a, const PolyQ& c) {
    Element out;
    out.reserve(a.size());
    for (const auto& x : a) out.push_back(x * c);
    return out;
}

bool is_zero(const Element& a) {
    return std::all_of(a.begin(), a.end(), [](const PolyQ& p) { return p.is_zero(); });
}

std::string to_string(const Element& a, std::span<const std::string> basis) {
    std::string out;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k].is_zero()) continue;
        std::string label = k < basis.size() ? basis[k] : "e" + std::to_string(k + 1);
        std::string coef = a[k].to_string();
        std::string term;
        if (coef == "1") term = label;
        else if (coef == "-1") term = "-" + label;
        else if (a[k].terms().size() > 1) term = "(" + coef + ")*" + label;
        else term = coef + "*" + label;
        if (out.empty()) out = term;
        else if (term[0] == '-') out += " - " + term.substr(1);
        else out += " + " + term;
    }
    return out.empty() ? "0" : out;
}

AlgebraStructure::AlgebraStructure(std::string name, std::size_t dim,
                                   std::vector<std::string> parameters,
                                   std::vector<std::string> basis)
    : name_(std::move(name)), n_(dim), params_(std::move(parameters)), basis_(std::move(basis)) {
    if (n_ == 0) throw DimensionMismatch("algebra dimension must be at least 1");
    if (basis_.empty())
        for (std::size_t i = 0; i < n_; ++i) basis_.push_back("e" + std::to_string(i + 1));
    if (basis_.size() != n_) throw DimensionMismatch("basis label count does not match dimension");
    c_.assign(n_ * n_, Element(n_));
}

const Element& AlgebraStructure::product(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) throw IndexOutOfRange("basis index out of range");
    return c_[i * n_ + j];
}

void AlgebraStructure::check_element(const Element& e) const {
    if (e.size() != n_) throw DimensionMismatch("element length does not match algebra dimension");
    for (const auto& p : e)
        for (const auto& v : p.variables())
            if (std::find(params_.begin(), params_.end(), v) == params_.end())
                throw ParseError("undeclared parameter '" + v + "' in algebra " + name_, 0);
}

void AlgebraStructure::set_product(std::size_t i, std::size_t j, Element value) {
    if (i >= n_ || j >= n_) throw IndexOutOfRange("basis index out of range");
    check_element(value);
    c_[i * n_ + j] = std::move(value);
}

void AlgebraStructure::set_idempotents(std::vector<Element> e) {
    for (const auto& x : e) check_element(x);
    idempotents_ = std::move(e);
}

Element AlgebraStructure::multiply(const Element& x, const Element& y) const {
    if (x.size() != n_ || y.size() != n_) throw DimensionMismatch("element length mismatch");
    Element out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n_; ++j) {
            if (y[j].is_zero()) continue;
            const Element& p = c_[i * n_ + j];
            PolyQ xy;
            bool have = false;
            for (std::size_t k = 0; k < n_; ++k) {
                if (p[k].is_zero()) continue;
                if (!have) {
                    xy = x[i] * y[j];
                    have = true;
                }
                out[k] += xy * p[k];
            }
        }
    }
    return out;
}

Element AlgebraStructure::basis_element(std::size_t i) const {
    if (i >= n_) throw IndexOutOfRange("basis index out of range");
    Element e(n_);
    e[i] = PolyQ(1);
    return e;
}

std::size_t AlgebraStructure::basis_index(std::string_view label) const {
    auto it = std::find(basis_.begin(), basis_.end(), label);
    if (it == basis_.end()) throw ParseError("unknown basis label '" + std::string(label) + "'", 0);
    return static_cast<std::size_t>(it - basis_.begin());
}

Element AlgebraStructure::parse_element(std::string_view text) const {
    PolyQ p = PolyQ::parse(text);
    Element out(n_);
    for (const auto& [m, c] : p.terms()) {
        std::optional<std::size_t> slot;
        PolyQ coef(c);
        for (const auto& [name, e] : m.powers()) {
            auto it = std::find(basis_.begin(), basis_.end(), name);
            if (it == basis_.end()) {
                coef *= PolyQ::variable(name).pow(e);
                continue;
            }
            if (slot || e != 1)
                throw ParseError("element '" + std::string(text) + "' is not linear in the basis", 0);
            slot = static_cast<std::size_t>(it - basis_.begin());
        }
        if (!slot) throw ParseError("element '" + std::string(text) + "' has a term without basis label", 0);
        out[*slot] += coef;
    }
    check_element(out);
    return out;
}

bool AlgebraStructure::is_parametric() const {
    for (const auto& e : c_)
        for (const auto& p : e)
            if (!p.is_constant()) return true;
    return false;
}

std::set<std::string> AlgebraStructure::used_parameters() const {
    std::set<std::string> out;
    for (const auto& e : c_)
        for (const auto& p : e) {
            auto v = p.variables();
            out.insert(v.begin(), v.end());
        }
    return out;
}

AlgebraStructure AlgebraStructure::specialize(const std::map<std::string, Rational>& values) const {
    std::map<std::string, PolyQ> subst;
    std::vector<std::string> remaining;
    for (const auto& p : params_) {
        auto it = values.find(p);
        if (it != values.end()) subst.emplace(p, PolyQ(it->second));
        else remaining.push_back(p);
    }
    AlgebraStructure out(name_, n_, remaining, basis_);
    auto sub = [&](const Element& e) {
        Element r;
        r.reserve(e.size());
        for (const auto& p : e) r.push_back(p.substitute(subst));
        return r;
    };
    for (std::size_t i = 0; i < n_ * n_; ++i) out.c_[i] = sub(c_[i]);
    out.claims_ = claims_;
    out.description_ = description_;
    for (const auto& e : idempotents_) out.idempotents_.push_back(sub(e));
    return out;
}

AlgebraStructure AlgebraStructure::renamed(std::string name) const {
    AlgebraStructure out = *this;
    out.name_ = std::move(name);
    return out;
}

std::string AlgebraStructure::table() const {
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            const Element& p = c_[i * n_ + j];
            if (is_zero(p)) continue;
            os << basis_[i] << " " << basis_[j] << " = " << to_string(p, basis_) << "\n";
            any = true;
        }
    if (!any) os << "(zero product)\n";
    return os.str();
}

RationalAlgebra::RationalAlgebra(const AlgebraStructure& a)
    : n_(a.dim()), c_(n_ * n_ * n_), sparse_(n_ * n_) {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            for (std::size_t k = 0; k < n_; ++k) {
                auto v = a.constant(i, j, k).as_constant();
                if (!v)
                    throw ParametricNotSupported("algebra " + a.name() +
                                                 " has unspecialized parameters; fix them first");
                c_[(i * n_ + j) * n_ + k] = *v;
                if (!v->is_zero()) sparse_[i * n_ + j].emplace_back(k, *v);
            }
}

VectorQ RationalAlgebra::multiply(std::span<const Rational> x, std::span<const Rational> y) const {
    if (x.size() != n_ || y.size() != n_) throw DimensionMismatch("element length mismatch");
    VectorQ out(n_);
    Rational xy;
    for (std::size_t i = 0; i < n_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n_; ++j) {
            if (y[j].is_zero()) continue;
            const auto& terms = sparse_[i * n_ + j];
            if (terms.empty()) continue;
            xy = x[i] * y[j];
            for (const auto& [k, c] : terms) out[k].addmul(xy, c);
        }
    }
    return out;
}

VectorQ RationalAlgebra::basis_element(std::size_t i) const {
    VectorQ v(n_);
    v.at(i) = Rational(1);
    return v;
}

MatrixQ RationalAlgebra::left_multiplication(std::span<const Rational> x) const {
    MatrixQ m(n_, n_);
    for (std::size_t j = 0; j < n_; ++j) {
        VectorQ col = multiply(x, basis_element(j));
        for (std::size_t k = 0; k < n_; ++k) m(k, j) = col[k];
    }
    return m;
}

MatrixQ RationalAlgebra::right_multiplication(std::span<const Rational> x) const {
    MatrixQ m(n_, n_);
    for (std::size_t j = 0; j < n_; ++j) {
        VectorQ col = multiply(basis_element(j), x);
        for (std::size_t k = 0; k < n_; ++k) m(k, j) = col[k];
    }
    return m;
}

MatrixQ RationalAlgebra::jordan_multiplication(std::span<const Rational> x) const {
    MatrixQ m = left_multiplication(x) + right_multiplication(x);
    const Rational half(1, 2);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) m(i, j) *= half;
    return m;
}

VectorQ to_rational(const Element& e) {
    VectorQ out;
    out.reserve(e.size());
    for (const auto& p : e) {
        auto v = p.as_constant();
        if (!v) throw ParametricNotSupported("element has parametric coordinates; fix parameters first");
        out.push_back(*v);
    }
    return out;
}

Element to_element(std::span<const Rational> v) {
    Element out;
    out.reserve(v.size());
    for (const auto& x : v) out.emplace_back(x);
    return out;
}

AlgebraStructure algebra_from_constants(std::string name, std::size_t n,
                                        std::span<const Rational> constants) {
    if (constants.size() != n * n * n) throw DimensionMismatch("constant count must be n^3");
    AlgebraStructure a(std::move(name), n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a.set_product(i, j, to_element(constants.subspan((i * n + j) * n, n)));
    return a;
}

}  // namespace nassoc
