#include "nassoc/moduli/transform.hpp"

#include <algorithm>
#include <numeric>

#include "nassoc/error.hpp"

namespace nassoc {

namespace {

std::vector<RatFunT> constants_over_t(const AlgebraStructure& a, const std::map<std::string, RatFunT>& subst) {
    const std::size_t n = a.dim();
    std::vector<RatFunT> c;
    c.reserve(n * n * n);
    auto resolve = [&](const std::string& name) {
        auto it = subst.find(name);
        if (it == subst.end())
            throw ParametricNotSupported("parameter '" + name + "' of " + a.name() + " has no substitution");
        return it->second;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) c.push_back(a.constant(i, j, k).evaluate<RatFunT>(resolve));
    return c;
}

std::string entry_name(std::size_t i, std::size_t j, std::size_t k) {
    return "c[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "][" + std::to_string(k + 1) + "]";
}

}  // namespace

TransformedConstants transform(const AlgebraStructure& a, const ParamBasis& p) {
    const std::size_t n = a.dim();
    if (p.columns.rows() != n || p.columns.cols() != n) throw DimensionMismatch("basis matrix does not match the algebra");
    if (determinant(p.columns).is_zero()) throw SingularForAllT("basis matrix is singular for every t");
    const MatrixT pinv = inverse(p.columns);
    const std::vector<RatFunT> c = constants_over_t(a, p.subst);
    std::vector<RatFunT> out;
    out.reserve(n * n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            std::vector<RatFunT> w(n);
            for (std::size_t i = 0; i < n; ++i) {
                if (p.columns(i, x).is_zero()) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    if (p.columns(j, y).is_zero()) continue;
                    RatFunT f = p.columns(i, x) * p.columns(j, y);
                    for (std::size_t k = 0; k < n; ++k) {
                        const RatFunT& cijk = c[(i * n + j) * n + k];
                        if (!cijk.is_zero()) w[k] = w[k] + f * cijk;
                    }
                }
            }
            std::vector<RatFunT> coords = pinv.apply(w);
            out.insert(out.end(), coords.begin(), coords.end());
        }
    return TransformedConstants(n, std::move(out));
}

AlgebraStructure change_basis(const AlgebraStructure& a, const MatrixQ& p) {
    const std::size_t n = a.dim();
    if (p.rows() != n || p.cols() != n) throw DimensionMismatch("basis matrix does not match the algebra");
    const MatrixQ pinv = inverse(p);
    AlgebraStructure out(a.name(), n, a.parameters(), a.basis());
    std::vector<Element> cols;
    for (std::size_t x = 0; x < n; ++x) cols.push_back(to_element(p.column(x)));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            Element w = a.multiply(cols[x], cols[y]);
            Element v(n);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t k = 0; k < n; ++k)
                    if (!pinv(r, k).is_zero() && !w[k].is_zero()) v[r] += w[k] * pinv(r, k);
            out.set_product(x, y, std::move(v));
        }
    return out;
}

DegenerationCertificate degeneration_check(const AlgebraStructure& a, const ParamBasis& p,
                                           const AlgebraStructure& b) {
    if (b.dim() != a.dim()) throw DimensionMismatch("degeneration between algebras of different dimension");
    const RationalAlgebra target(b);
    const TransformedConstants c = transform(a, p);
    const std::size_t n = a.dim();
    DegenerationCertificate cert;
    cert.source = a.name();
    cert.target = b.name();
    cert.verdict = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                DegenerationEntry e{i, j, k, c(i, j, k), std::nullopt, target.constant(i, j, k), false};
                try {
                    e.limit = limit_at_zero(e.value);
                    e.ok = *e.limit == e.expected;
                } catch (const PoleAtZero&) {
                    e.ok = false;
                }
                if (!e.ok && cert.verdict) {
                    cert.verdict = false;
                    cert.failure = entry_name(i, j, k) + "(t) = " + e.value.to_string() +
                                   (e.limit ? " tends to " + e.limit->to_string() : std::string(" has a pole at t = 0")) +
                                   ", expected " + e.expected.to_string();
                }
                cert.entries.push_back(std::move(e));
            }
    return cert;
}

DegenerationCertificate family_degeneration_check(const AlgebraStructure& a, const MatrixT& p,
                                                  const std::map<std::string, RatFunT>& subst,
                                                  const AlgebraStructure& b) {
    return degeneration_check(a, ParamBasis{p, subst}, b);
}

std::optional<ParamBasis> search_monomial_basis(const AlgebraStructure& a, const AlgebraStructure& b,
                                                int max_exponent) {
    const RationalAlgebra ra(a), rb(b);
    const std::size_t n = ra.dim();
    if (rb.dim() != n) throw DimensionMismatch("degeneration between algebras of different dimension");
    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        // E_x = t^{k_x} e_{sigma(x)}: c'_xy^z = t^{k_x + k_y - k_z} c_{sx sy}^{sz}.
        std::vector<int> k(n, 0);
        while (true) {
            bool ok = true;
            for (std::size_t x = 0; x < n && ok; ++x)
                for (std::size_t y = 0; y < n && ok; ++y)
                    for (std::size_t z = 0; z < n && ok; ++z) {
                        const Rational& c = ra.constant(sigma[x], sigma[y], sigma[z]);
                        const Rational& target = rb.constant(x, y, z);
                        int e = k[x] + k[y] - k[z];
                        if (c.is_zero()) ok = target.is_zero();
                        else if (e < 0) ok = false;
                        else if (e == 0) ok = c == target;
                        else ok = target.is_zero();
                    }
            if (ok) {
                MatrixT m(n, n);
                for (std::size_t x = 0; x < n; ++x) {
                    RatFunT entry(1);
                    for (int i = 0; i < k[x]; ++i) entry = entry * RatFunT::t();
                    m(sigma[x], x) = entry;
                }
                return ParamBasis{std::move(m), {}};
            }
            std::size_t pos = n;
            while (pos > 0) {
                if (++k[pos - 1] <= max_exponent) break;
                k[pos - 1] = 0;
                --pos;
            }
            if (pos == 0) break;
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return std::nullopt;
}

}  // namespace nassoc
