#include "nassoc/algebras/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "nassoc/error.hpp"

namespace nassoc {

namespace {

std::vector<std::string> merged_parameters(const AlgebraStructure& a, std::initializer_list<const PolyQ*> extra) {
    std::vector<std::string> params = a.parameters();
    std::set<std::string> seen(params.begin(), params.end());
    for (const PolyQ* p : extra)
        for (const auto& v : p->variables())
            if (seen.insert(v).second) params.push_back(v);
    return params;
}

std::vector<std::string> merged_parameters(const AlgebraStructure& a, std::initializer_list<const Element*> extra) {
    std::vector<std::string> params = a.parameters();
    std::set<std::string> seen(params.begin(), params.end());
    for (const Element* e : extra)
        for (const auto& c : *e)
            for (const auto& v : c.variables())
                if (seen.insert(v).second) params.push_back(v);
    return params;
}

template <class F>
AlgebraStructure rebuild(const AlgebraStructure& a, std::string name, std::vector<std::string> params, F product) {
    AlgebraStructure out(std::move(name), a.dim(), std::move(params), a.basis());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) out.set_product(i, j, product(i, j));
    return out;
}

}  // namespace

AlgebraStructure plus_algebra(const AlgebraStructure& a) {
    const PolyQ half(Rational(1, 2));
    return rebuild(a, a.name() + "+", a.parameters(), [&](std::size_t i, std::size_t j) {
        return scaled(add(a.product(i, j), a.product(j, i)), half);
    });
}

AlgebraStructure minus_algebra(const AlgebraStructure& a) {
    const PolyQ half(Rational(1, 2));
    return rebuild(a, a.name() + "-", a.parameters(), [&](std::size_t i, std::size_t j) {
        return scaled(subtract(a.product(i, j), a.product(j, i)), half);
    });
}

AlgebraStructure opposite_algebra(const AlgebraStructure& a) {
    return rebuild(a, a.name() + "^op", a.parameters(),
                   [&](std::size_t i, std::size_t j) { return a.product(j, i); });
}

AlgebraStructure mutation(const AlgebraStructure& a, const Element& p, const Element& q) {
    return rebuild(a, a.name() + "_mut", merged_parameters(a, {&p, &q}), [&](std::size_t i, std::size_t j) {
        Element x = a.basis_element(i), y = a.basis_element(j);
        return subtract(a.multiply(a.multiply(x, p), y), a.multiply(a.multiply(y, q), x));
    });
}

AlgebraStructure kantor_square(const AlgebraStructure& a, const Element& p) {
    return rebuild(a, a.name() + "_kantor", merged_parameters(a, {&p}), [&](std::size_t i, std::size_t j) {
        Element x = a.basis_element(i), y = a.basis_element(j);
        Element r = a.multiply(p, a.multiply(x, y));
        r = subtract(r, a.multiply(a.multiply(p, x), y));
        return subtract(r, a.multiply(x, a.multiply(p, y)));
    });
}

AlgebraStructure scalar_mutation(const AlgebraStructure& a, const PolyQ& alpha, const PolyQ& beta) {
    return rebuild(a, a.name() + "_scalar", merged_parameters(a, {&alpha, &beta}),
                   [&](std::size_t i, std::size_t j) {
                       return add(scaled(a.product(i, j), alpha), scaled(a.product(j, i), beta));
                   });
}

AlgebraStructure unital_hull(const AlgebraStructure& a) {
    const std::size_t n = a.dim();
    std::vector<std::string> basis = a.basis();
    basis.push_back("u");
    AlgebraStructure out(a.name() + "#", n + 1, a.parameters(), basis);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Element v = a.product(i, j);
            v.emplace_back();
            out.set_product(i, j, std::move(v));
        }
    for (std::size_t i = 0; i <= n; ++i) {
        out.set_product(i, n, out.basis_element(i));
        out.set_product(n, i, out.basis_element(i));
    }
    return out;
}

CheckResult compatible_check(const AlgebraStructure& dot, const AlgebraStructure& star) {
    if (dot.dim() != star.dim()) throw DimensionMismatch("compatible structures must share the space");
    if (dot.parameters() != star.parameters())
        throw DimensionMismatch("compatible structures must share the parameters");
    static const char* const laws[] = {
        "((x1 . x2) . x3) - (x2 . (x3 . x1)) = 0",
        "((x1 * x2) * x3) - (x2 * (x3 * x1)) = 0",
        "((x1 * x2) . x3) + ((x1 . x2) * x3) - (x2 * (x3 . x1)) - (x2 . (x3 * x1)) = 0",
    };
    const std::size_t n = dot.dim();
    auto d = [&](const Element& x, const Element& y) { return dot.multiply(x, y); };
    auto s = [&](const Element& x, const Element& y) { return star.multiply(x, y); };
    for (std::size_t law = 0; law < 3; ++law)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    const Element x = dot.basis_element(i), y = dot.basis_element(j), z = dot.basis_element(k);
                    Element v;
                    if (law == 0) v = subtract(d(d(x, y), z), d(y, d(z, x)));
                    else if (law == 1) v = subtract(s(s(x, y), z), s(y, s(z, x)));
                    else v = subtract(add(d(s(x, y), z), s(d(x, y), z)), add(s(y, d(z, x)), d(y, s(z, x))));
                    for (std::size_t c = 0; c < n; ++c)
                        if (!v[c].is_zero())
                            return {false, Counterexample{laws[law], {dot.basis()[i], dot.basis()[j], dot.basis()[k]}, c, v[c]}};
                }
    return {};
}

CocycleSpec::CocycleSpec(std::size_t n) : n_(n), theta_(n * n, Element(n)) {}

const Element& CocycleSpec::operator()(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) throw IndexOutOfRange("cocycle index out of range");
    return theta_[i * n_ + j];
}

void CocycleSpec::set(std::size_t i, std::size_t j, Element value) {
    if (i >= n_ || j >= n_) throw IndexOutOfRange("cocycle index out of range");
    if (value.size() != n_) throw DimensionMismatch("cocycle value length mismatch");
    theta_[i * n_ + j] = value;
    theta_[j * n_ + i] = std::move(value);
}

void CocycleSpec::add_delta(std::size_t k, std::size_t i, std::size_t j, const PolyQ& coefficient) {
    if (k >= n_ || i >= n_ || j >= n_) throw IndexOutOfRange("cocycle index out of range");
    theta_[i * n_ + j][k] += coefficient;
    if (i != j) theta_[j * n_ + i][k] += coefficient;
}

void CocycleSpec::add_form(std::size_t k, const PolyQ& form) {
    for (const auto& [m, c] : form.terms()) {
        std::optional<std::pair<std::size_t, std::size_t>> delta;
        PolyQ coef(c);
        for (const auto& [name, e] : m.powers()) {
            bool is_delta = name.size() == 3 && name[0] == 'D' && std::isdigit(static_cast<unsigned char>(name[1])) &&
                            std::isdigit(static_cast<unsigned char>(name[2]));
            if (!is_delta) {
                coef *= PolyQ::variable(name).pow(e);
                continue;
            }
            if (delta || e != 1) throw ParseError("cocycle form must be linear in the D<i><j> forms", 0);
            std::size_t i = static_cast<std::size_t>(name[1] - '1');
            std::size_t j = static_cast<std::size_t>(name[2] - '1');
            delta.emplace(i, j);
        }
        if (!delta) throw ParseError("cocycle form term without a D<i><j> factor", 0);
        add_delta(k, delta->first, delta->second, coef);
    }
}

AlgebraStructure algebra_from_cocycle(const AlgebraStructure& lie, const CocycleSpec& theta) {
    const std::size_t n = lie.dim();
    if (theta.dim() != n) throw DimensionMismatch("cocycle dimension does not match the algebra");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!is_zero(add(lie.product(i, j), lie.product(j, i))))
                throw DimensionMismatch("bracket algebra " + lie.name() + " is not anticommutative");
    std::vector<std::string> params = lie.parameters();
    std::set<std::string> seen(params.begin(), params.end());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& c : theta(i, j))
                for (const auto& v : c.variables())
                    if (seen.insert(v).second) params.push_back(v);
    return rebuild(lie, lie.name() + "_theta", params,
                   [&](std::size_t i, std::size_t j) { return add(theta(i, j), lie.product(i, j)); });
}

}  // namespace nassoc
