#include "nassoc/algebras/structure.hpp"

#include <algorithm>

#include "nassoc/algebras/constructions.hpp"
#include "nassoc/error.hpp"
#include "nassoc/terms/systems.hpp"
#include "nassoc/terms/word.hpp"

namespace nassoc {

namespace {

VectorQ eval_shape(const RationalAlgebra& a, std::string_view shape, std::size_t& pos,
                   const std::vector<VectorQ>& args, std::size_t& leaf) {
    if (shape[pos++] == 'l') return args[leaf++];
    VectorQ l = eval_shape(a, shape, pos, args, leaf);
    VectorQ r = eval_shape(a, shape, pos, args, leaf);
    return a.multiply(l, r);
}

VectorQ eval_shape(const RationalAlgebra& a, std::string_view shape, const std::vector<VectorQ>& args) {
    std::size_t pos = 0, leaf = 0;
    return eval_shape(a, shape, pos, args, leaf);
}

bool is_zero_vector(const VectorQ& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

}  // namespace

DerivationAlgebra derivation_algebra(const AlgebraStructure& a) {
    const RationalAlgebra r(a);
    const std::size_t n = r.dim();
    auto var = [n](std::size_t row, std::size_t col) { return row * n + col; };
    MatrixQ sys(n * n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l) {
                const std::size_t eq = (i * n + j) * n + l;
                for (std::size_t m = 0; m < n; ++m) {
                    sys(eq, var(l, m)) += r.constant(i, j, m);
                    sys(eq, var(m, i)) -= r.constant(m, j, l);
                    sys(eq, var(m, j)) -= r.constant(i, m, l);
                }
            }
    DerivationAlgebra out;
    for (const auto& v : nullspace(sys)) {
        LinearMap d(n, n);
        for (std::size_t row = 0; row < n; ++row)
            for (std::size_t col = 0; col < n; ++col) d(row, col) = v[var(row, col)];
        out.basis.push_back(std::move(d));
    }
    out.dim = out.basis.size();
    return out;
}

bool is_leibniz_derivation(const AlgebraStructure& a, const LinearMap& d, int n,
                           const std::optional<std::string>& shape) {
    const RationalAlgebra r(a);
    const std::size_t dim = r.dim();
    if (d.rows() != dim || d.cols() != dim) throw DimensionMismatch("linear map does not match the algebra");
    if (n < 1) throw IndexOutOfRange("Leibniz arity must be positive");
    std::vector<std::string> shapes;
    if (shape) {
        if (std::count(shape->begin(), shape->end(), 'l') != n || subtree_length(*shape, 0) != shape->size())
            throw ParseError("bracketing shape does not have " + std::to_string(n) + " leaves", 0);
        shapes.push_back(*shape);
    } else {
        shapes = shapes_of_degree(n);
    }
    const auto k = static_cast<std::size_t>(n);
    std::vector<std::size_t> tuple(k, 0);
    std::vector<VectorQ> images;
    for (std::size_t i = 0; i < dim; ++i) images.push_back(d.column(i));
    while (true) {
        std::vector<VectorQ> args;
        for (auto t : tuple) args.push_back(r.basis_element(t));
        for (const auto& s : shapes) {
            VectorQ lhs = d.apply(eval_shape(r, s, args));
            for (std::size_t pos = 0; pos < k; ++pos) {
                std::vector<VectorQ> varied = args;
                varied[pos] = images[tuple[pos]];
                VectorQ term = eval_shape(r, s, varied);
                for (std::size_t c = 0; c < dim; ++c) lhs[c] -= term[c];
            }
            if (!is_zero_vector(lhs)) return false;
        }
        std::size_t pos = k;
        while (pos > 0) {
            if (++tuple[pos - 1] < dim) break;
            tuple[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) return true;
    }
}

Subspace product_span(const RationalAlgebra& a, const Subspace& u, const Subspace& v) {
    std::vector<VectorQ> prods;
    for (const auto& x : u.basis())
        for (const auto& y : v.basis()) {
            VectorQ p = a.multiply(x, y);
            if (!is_zero_vector(p)) prods.push_back(std::move(p));
        }
    return Subspace::span(a.dim(), prods);
}

PowersReport powers_and_nilpotency(const AlgebraStructure& a) {
    const RationalAlgebra r(a);
    const std::size_t n = r.dim();
    PowersReport rep;
    rep.lower.push_back(Subspace::whole(n));
    for (std::size_t k = 2; k <= 2 * n + 2; ++k) {
        Subspace next(n);
        for (std::size_t i = 1; i < k; ++i)
            next = next + product_span(r, rep.lower[i - 1], rep.lower[k - i - 1]);
        rep.lower.push_back(std::move(next));
        if (rep.lower.back().is_zero()) break;
    }
    while (rep.lower.size() > 1 && rep.lower.back() == rep.lower[rep.lower.size() - 2]) rep.lower.pop_back();
    if (rep.lower.back().is_zero()) {
        rep.nilpotent = true;
        rep.nilpotency_class = static_cast<int>(rep.lower.size()) - 1;
    }
    rep.derived.push_back(Subspace::whole(n));
    while (!rep.derived.back().is_zero()) {
        Subspace next = product_span(r, rep.derived.back(), rep.derived.back());
        if (next == rep.derived.back()) break;
        rep.derived.push_back(std::move(next));
    }
    rep.solvable = rep.derived.back().is_zero();
    return rep;
}

Subspace power(const AlgebraStructure& a, int k) {
    if (k < 1) throw IndexOutOfRange("powers start at 1");
    PowersReport rep = powers_and_nilpotency(a);
    auto idx = static_cast<std::size_t>(k - 1);
    if (idx < rep.lower.size()) return rep.lower[idx];
    return rep.lower.back();
}

Subspace annihilator(const AlgebraStructure& a) {
    const RationalAlgebra r(a);
    const std::size_t n = r.dim();
    // x e_j = 0 and e_j x = 0 for every j.
    MatrixQ sys(2 * n * n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i) {
                sys((j * n + k), i) = r.constant(i, j, k);
                sys(n * n + (j * n + k), i) = r.constant(j, i, k);
            }
    return Subspace::kernel(sys);
}

AlgebraStructure restrict_to(const AlgebraStructure& a, const Subspace& u) {
    const RationalAlgebra r(a);
    const std::size_t d = u.dim();
    if (d == 0) throw DimensionMismatch("cannot restrict to the zero subspace");
    std::vector<Rational> constants;
    constants.reserve(d * d * d);
    for (const auto& x : u.basis())
        for (const auto& y : u.basis()) {
            VectorQ p = r.multiply(x, y);
            if (!u.contains(p)) throw DimensionMismatch("subspace is not closed under the product");
            VectorQ c = u.coordinates(p);
            constants.insert(constants.end(), c.begin(), c.end());
        }
    return algebra_from_constants(a.name() + "|U", d, constants);
}

CheckResult subalgebra_identity_check(const AlgebraStructure& a, int k, const IdentitySystem& sys) {
    Subspace u = power(a, k);
    if (u.is_zero()) return {};
    return check_identity(restrict_to(a, u), sys);
}

bool is_idempotent(const AlgebraStructure& a, const Element& e) {
    return is_zero(subtract(a.multiply(e, e), e));
}

PeirceSplit peirce(const AlgebraStructure& a, const Element& e) {
    const RationalAlgebra r(a);
    const std::size_t n = r.dim();
    VectorQ ev = to_rational(e);
    if (ev.size() != n) throw DimensionMismatch("element length does not match the algebra");
    VectorQ sq = r.multiply(ev, ev);
    if (sq != ev) throw NotIdempotent("element is not idempotent");
    MatrixQ l = r.jordan_multiplication(ev);
    auto shifted = [&](const Rational& lambda) {
        MatrixQ m = l;
        for (std::size_t i = 0; i < n; ++i) m(i, i) -= lambda;
        return Subspace::kernel(m);
    };
    PeirceSplit s;
    s.a0 = shifted(Rational(0));
    s.a_half = shifted(Rational(1, 2));
    s.a1 = shifted(Rational(1));
    s.spans = s.a0.dim() + s.a_half.dim() + s.a1.dim() == n;
    if (!s.spans) throw NonSplitOperator("x -> (xe + ex)/2 has eigenvalues outside {0, 1/2, 1}");
    const Subspace all = Subspace::whole(n);
    s.half_zero = s.a_half.is_zero();
    s.a0_ideal = s.a0.contains(product_span(r, all, s.a0)) && s.a0.contains(product_span(r, s.a0, all));
    s.a1_ideal = s.a1.contains(product_span(r, all, s.a1)) && s.a1.contains(product_span(r, s.a1, all));
    s.a0a1_zero = product_span(r, s.a0, s.a1).is_zero();
    s.a1a0_zero = product_span(r, s.a1, s.a0).is_zero();
    s.e_commutes = true;
    for (std::size_t i = 0; i < n; ++i) {
        VectorQ x = r.basis_element(i);
        if (r.multiply(ev, x) != r.multiply(x, ev)) s.e_commutes = false;
    }
    return s;
}

std::string Fingerprint::to_string() const {
    auto flag = [](bool b) { return b ? "yes" : "no"; };
    std::string out = "dim " + std::to_string(dim) + ", dim A^2 " + std::to_string(dim_square) + ", dim A^3 " +
                      std::to_string(dim_cube) + ", dim Ann " + std::to_string(dim_annihilator) + ", dim Der " +
                      std::to_string(dim_der) + ", dim Der(A+) " + std::to_string(dim_der_plus) +
                      ", nilpotency class " + (nilpotency_class ? std::to_string(*nilpotency_class) : "inf");
    out += std::string(", commutative ") + flag(commutative) + ", associative " + flag(associative) +
           ", shift associative " + flag(shift_associative) + ", cyclic associative " + flag(cyclic_associative);
    return out;
}

Fingerprint fingerprint(const AlgebraStructure& a) {
    Fingerprint f;
    PowersReport p = powers_and_nilpotency(a);
    f.dim = a.dim();
    // The chain is trimmed once it stabilizes.
    auto power_dim = [&](std::size_t k) { return p.lower[std::min(k - 1, p.lower.size() - 1)].dim(); };
    f.dim_square = power_dim(2);
    f.dim_cube = power_dim(3);
    f.dim_annihilator = annihilator(a).dim();
    f.dim_der = derivation_algebra(a).dim;
    f.dim_der_plus = derivation_algebra(plus_algebra(a)).dim;
    f.nilpotency_class = p.nilpotency_class;
    f.commutative = static_cast<bool>(check_identity(a, builtin_system("com-as").identities.front()));
    f.associative = static_cast<bool>(check_identity(a, builtin_system("as")));
    f.shift_associative = static_cast<bool>(check_identity(a, builtin_system("sas")));
    f.cyclic_associative = static_cast<bool>(check_identity(a, builtin_system("cas")));
    return f;
}

}  // namespace nassoc
