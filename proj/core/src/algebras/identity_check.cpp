#include "nassoc/algebras/identity_check.hpp"

#include <algorithm>
#include <map>

#include "nassoc/error.hpp"
#include "nassoc/terms/polarize.hpp"

namespace nassoc {

namespace {

class WordEvaluator {
public:
    WordEvaluator(const AlgebraStructure& a, std::span<const Element> args) : a_(a), args_(args) {}

    const Element& operator()(const Word& w) {
        auto it = memo_.find(w);
        if (it != memo_.end()) return it->second;
        Element v;
        if (w.is_leaf()) {
            auto i = static_cast<std::size_t>(w.leaves()[0]);
            if (i == 0 || i > args_.size()) throw IndexOutOfRange("identity variable without argument");
            v = args_[i - 1];
        } else {
            auto [l, r] = w.split();
            Element lv = (*this)(l);
            v = a_.multiply(lv, (*this)(r));
        }
        return memo_.emplace(w, std::move(v)).first->second;
    }

private:
    const AlgebraStructure& a_;
    std::span<const Element> args_;
    std::map<Word, Element> memo_;
};

Element evaluate_with(WordEvaluator& eval, std::size_t n, const Expr& e) {
    Element out(n);
    for (const auto& [w, c] : e.terms()) {
        const Element& v = eval(w);
        for (std::size_t k = 0; k < n; ++k)
            if (!v[k].is_zero()) out[k] += v[k] * c;
    }
    return out;
}

std::optional<std::size_t> first_nonzero(const Element& v) {
    for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) return k;
    return std::nullopt;
}

std::string generic_name(int r, std::size_t i) {
    return "_x" + std::to_string(r) + "_" + std::to_string(i + 1);
}

CheckResult check_multilinear(const AlgebraStructure& a, const Identity& id) {
    const std::size_t n = a.dim();
    const auto k = static_cast<std::size_t>(id.num_vars);
    std::vector<std::size_t> tuple(k, 0);
    std::vector<Element> args(k);
    while (true) {
        for (std::size_t r = 0; r < k; ++r) args[r] = a.basis_element(tuple[r]);
        WordEvaluator eval(a, args);
        Element v = evaluate_with(eval, n, id.expr);
        if (auto c = first_nonzero(v)) {
            Counterexample ce{id.to_string(), {}, *c, v[*c]};
            for (auto t : tuple) ce.arguments.push_back(a.basis()[t]);
            return {false, std::move(ce)};
        }
        std::size_t pos = k;
        while (pos > 0) {
            if (++tuple[pos - 1] < n) break;
            tuple[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) return {};
    }
}

CheckResult check_symbolic(const AlgebraStructure& a, const Identity& id) {
    const std::size_t n = a.dim();
    std::vector<Element> args;
    for (int r = 1; r <= id.num_vars; ++r) {
        Element x(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::string name = generic_name(r, i);
            if (std::find(a.parameters().begin(), a.parameters().end(), name) != a.parameters().end())
                throw ParameterClash("algebra parameter '" + name + "' collides with a generic coordinate");
            x[i] = PolyQ::variable(name);
        }
        args.push_back(std::move(x));
    }
    WordEvaluator eval(a, args);
    Element v = evaluate_with(eval, n, id.expr);
    if (auto c = first_nonzero(v)) {
        Counterexample ce{id.to_string(), {}, *c, v[*c]};
        for (int r = 1; r <= id.num_vars; ++r) ce.arguments.push_back("x" + std::to_string(r) + " generic");
        return {false, std::move(ce)};
    }
    return {};
}

}  // namespace

std::string Counterexample::to_string() const {
    std::string out = identity + " fails at (";
    for (std::size_t i = 0; i < arguments.size(); ++i) out += (i ? ", " : "") + arguments[i];
    return out + "): coordinate " + std::to_string(coordinate + 1) + " is " + value.to_string();
}

Element evaluate(const AlgebraStructure& a, const Expr& e, std::span<const Element> args) {
    WordEvaluator eval(a, args);
    return evaluate_with(eval, a.dim(), e);
}

CheckResult check_identity(const AlgebraStructure& a, const Identity& id, CheckMode mode) {
    if (mode == CheckMode::symbolic) return check_symbolic(a, id);
    if (id.is_multilinear()) return check_multilinear(a, id);
    for (const auto& m : multilinearize(id)) {
        CheckResult r = check_multilinear(a, m);
        if (!r) return r;
    }
    return {};
}

CheckResult check_identity(const AlgebraStructure& a, const IdentitySystem& sys, CheckMode mode) {
    for (const auto& id : sys.identities) {
        CheckResult r = check_identity(a, id, mode);
        if (!r) return r;
    }
    return {};
}

}  // namespace nassoc
