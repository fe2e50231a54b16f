#include "nassoc/algebras/wedderburn.hpp"

#include <algorithm>
#include <optional>

#include <gmpxx.h>

#include "nassoc/algebras/structure.hpp"
#include "nassoc/error.hpp"

namespace nassoc {

namespace {

constexpr int max_lift_iterations = 64;
// Rational root search gives up on constant terms beyond this size.
const mpz_class max_root_search("1000000000000");

bool all_zero(const VectorQ& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

VectorQ axpy(VectorQ y, const Rational& a, const VectorQ& x) {
    for (std::size_t i = 0; i < y.size(); ++i)
        if (!x[i].is_zero()) y[i].addmul(a, x[i]);
    return y;
}

VectorQ scale(VectorQ v, const Rational& a) {
    for (auto& x : v) x *= a;
    return v;
}

// Some solution of M x = b, if any.
std::optional<VectorQ> solve(const MatrixQ& m, const VectorQ& b) {
    MatrixQ aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    RrefResult r = rref(aug);
    VectorQ x(m.cols());
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
        if (r.pivots[i] == m.cols()) return std::nullopt;
        x[r.pivots[i]] = r.rows(i, m.cols());
    }
    return x;
}

std::vector<mpz_class> divisors(mpz_class v) {
    v = abs(v);
    std::vector<mpz_class> small, large;
    for (mpz_class d = 1; d * d <= v; ++d) {
        if (v % d != 0) continue;
        small.push_back(d);
        if (d * d != v) large.push_back(v / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

Rational eval_poly(const VectorQ& c, const Rational& x) {
    Rational acc;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

// Distinct rational roots of sum c_i x^i, or nullopt when the search is out
// of range.
std::optional<std::vector<Rational>> rational_roots(VectorQ c) {
    std::vector<Rational> roots;
    while (!c.empty() && c.front().is_zero()) {
        if (roots.empty()) roots.push_back(Rational(0));
        c.erase(c.begin());
    }
    if (c.size() <= 1) return roots;
    mpz_class lcm = 1;
    for (const auto& x : c) lcm = ::lcm(lcm, x.raw().get_den());
    mpz_class a0 = mpq_class(c.front().raw() * lcm).get_num();
    mpz_class an = mpq_class(c.back().raw() * lcm).get_num();
    if (abs(a0) > max_root_search || abs(an) > max_root_search) return std::nullopt;
    for (const auto& p : divisors(a0))
        for (const auto& q : divisors(an))
            for (int sgn : {1, -1}) {
                Rational cand(mpq_class(sgn * p, q));
                if (std::find(roots.begin(), roots.end(), cand) != roots.end()) continue;
                if (eval_poly(c, cand).is_zero()) roots.push_back(cand);
            }
    return roots;
}

class Quotient {
public:
    Quotient(const RationalAlgebra& a, const Subspace& r) : a_(a), r_(r) {
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (std::find(r.pivots().begin(), r.pivots().end(), j) == r.pivots().end()) free_.push_back(j);
    }

    std::size_t dim() const { return free_.size(); }

    VectorQ lift(const VectorQ& q) const {
        VectorQ v(a_.dim());
        for (std::size_t i = 0; i < free_.size(); ++i) v[free_[i]] = q[i];
        return v;
    }

    VectorQ project(const VectorQ& v) const {
        VectorQ red = r_.reduce(v);
        VectorQ q;
        for (auto j : free_) q.push_back(red[j]);
        return q;
    }

    VectorQ multiply(const VectorQ& x, const VectorQ& y) const {
        return project(a_.multiply(lift(x), lift(y)));
    }

    VectorQ basis_element(std::size_t i) const {
        VectorQ v(dim());
        v[i] = Rational(1);
        return v;
    }

private:
    const RationalAlgebra& a_;
    const Subspace& r_;
    std::vector<std::size_t> free_;
};

VectorQ quotient_unit(const Quotient& q) {
    const std::size_t s = q.dim();
    // sum_a u_a (b_a b_c) = b_c for every c.
    MatrixQ m(s * s, s);
    VectorQ rhs(s * s);
    for (std::size_t c = 0; c < s; ++c) {
        for (std::size_t a = 0; a < s; ++a) {
            VectorQ p = q.multiply(q.basis_element(a), q.basis_element(c));
            for (std::size_t k = 0; k < s; ++k) m(c * s + k, a) = p[k];
        }
        rhs[c * s + c] = Rational(1);
    }
    auto u = solve(m, rhs);
    if (!u) throw VerificationFailed("unit: A/R has no unit element, so R is not the radical");
    return *u;
}

// Splits the idempotent f by the eigenvalues of z = f y on fQ.
std::vector<VectorQ> split_idempotent(const Quotient& q, const VectorQ& f, const VectorQ& y) {
    const VectorQ z = q.multiply(f, y);
    std::vector<VectorQ> powers{f};
    std::optional<VectorQ> dependence;
    while (!dependence) {
        VectorQ next = powers.size() == 1 ? z : q.multiply(powers.back(), z);
        MatrixQ m(q.dim(), powers.size());
        for (std::size_t j = 0; j < powers.size(); ++j)
            for (std::size_t k = 0; k < q.dim(); ++k) m(k, j) = powers[j][k];
        dependence = solve(m, next);
        if (!dependence) powers.push_back(std::move(next));
    }
    if (powers.size() == 1) return {f};
    VectorQ minpoly;
    for (const auto& c : *dependence) minpoly.push_back(-c);
    minpoly.emplace_back(1);
    auto roots = rational_roots(minpoly);
    if (!roots || roots->size() != powers.size())
        throw VerificationFailed("split: A/R is not split semisimple over Q (minimal polynomial of degree " +
                                 std::to_string(powers.size()) + " lacks distinct rational roots)");
    std::vector<VectorQ> out;
    for (const auto& lambda : *roots) {
        VectorQ e = f;
        for (const auto& mu : *roots) {
            if (mu == lambda) continue;
            VectorQ factor = scale(axpy(z, -mu, f), (lambda - mu).inverse());
            e = q.multiply(e, factor);
        }
        out.push_back(std::move(e));
    }
    return out;
}

Subspace power_of(const RationalAlgebra& a, std::vector<Subspace>& chain, std::size_t k) {
    Subspace next(a.dim());
    for (std::size_t i = 1; i < k; ++i) next = next + product_span(a, chain[i - 1], chain[k - i - 1]);
    return next;
}

}  // namespace

std::vector<std::string> WedderburnSplit::failed_flags() const {
    std::vector<std::string> out;
    if (!r_ideal) out.emplace_back("r_ideal");
    if (!r_nilpotent) out.emplace_back("r_nilpotent");
    if (!s_closed) out.emplace_back("s_closed");
    if (!s_commutative_associative) out.emplace_back("s_commutative_associative");
    if (!direct_sum) out.emplace_back("direct_sum");
    return out;
}

WedderburnSplit wedderburn_report(const AlgebraStructure& alg) {
    const RationalAlgebra a(alg);
    const std::size_t n = a.dim();

    VectorQ traces(n);
    for (std::size_t k = 0; k < n; ++k) {
        MatrixQ l = a.jordan_multiplication(a.basis_element(k));
        for (std::size_t i = 0; i < n; ++i) traces[k] += l(i, i);
    }
    MatrixQ gram(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            VectorQ x = a.multiply(a.basis_element(i), a.basis_element(j));
            VectorQ y = a.multiply(a.basis_element(j), a.basis_element(i));
            for (std::size_t k = 0; k < n; ++k) gram(i, j).addmul((x[k] + y[k]) * Rational(1, 2), traces[k]);
        }

    WedderburnSplit w;
    w.r = Subspace::kernel(gram);
    const Quotient q(a, w.r);

    std::vector<VectorQ> idems;
    if (q.dim() > 0) {
        idems.push_back(quotient_unit(q));
        for (std::size_t b = 0; b < q.dim(); ++b) {
            std::vector<VectorQ> next;
            for (const auto& f : idems)
                for (auto& e : split_idempotent(q, f, q.basis_element(b))) next.push_back(std::move(e));
            idems = std::move(next);
        }
    }

    for (const auto& bar : idems) {
        VectorQ x = q.lift(bar);
        for (const auto& prev : w.idempotents) x = axpy(x, Rational(-1), a.jordan_multiplication(prev).apply(x));
        bool stable = false;
        for (int it = 0; it < max_lift_iterations && !stable; ++it) {
            VectorQ x2 = a.multiply(x, x);
            if (x2 == x) {
                stable = true;
                break;
            }
            VectorQ x3 = a.multiply(x2, x);
            x = axpy(scale(x2, Rational(3)), Rational(-2), x3);
        }
        if (!stable) throw VerificationFailed("lift: idempotent iteration did not stabilize");
        w.idempotents.push_back(std::move(x));
    }
    w.s = Subspace::span(n, w.idempotents);

    const Subspace all = Subspace::whole(n);
    w.r_ideal = w.r.contains(product_span(a, all, w.r)) && w.r.contains(product_span(a, w.r, all));
    std::vector<Subspace> chain{w.r};
    for (std::size_t k = 2; k <= n + 1 && !chain.back().is_zero(); ++k) chain.push_back(power_of(a, chain, k));
    w.r_nilpotent = chain.back().is_zero();
    w.s_closed = product_span(a, w.s, w.s) == w.s;
    w.s_commutative_associative = true;
    const auto& sb = w.s.basis();
    for (std::size_t i = 0; i < sb.size() && w.s_commutative_associative; ++i)
        for (std::size_t j = 0; j < sb.size(); ++j) {
            VectorQ ij = a.multiply(sb[i], sb[j]);
            if (ij != a.multiply(sb[j], sb[i])) {
                w.s_commutative_associative = false;
                break;
            }
            for (std::size_t k = 0; k < sb.size(); ++k)
                if (a.multiply(ij, sb[k]) != a.multiply(sb[i], a.multiply(sb[j], sb[k]))) {
                    w.s_commutative_associative = false;
                    break;
                }
        }
    w.direct_sum = w.s.dim() + w.r.dim() == n && (w.s + w.r).dim() == n;
    for (const auto& e : w.idempotents)
        if (all_zero(e)) w.direct_sum = false;
    return w;
}

WedderburnSplit wedderburn(const AlgebraStructure& a) {
    WedderburnSplit w = wedderburn_report(a);
    auto failed = w.failed_flags();
    if (!failed.empty()) throw VerificationFailed(failed.front());
    return w;
}

}  // namespace nassoc
