#include "nassoc/operads/consequences.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "nassoc/error.hpp"
#include "nassoc/terms/polarize.hpp"

namespace nassoc {

ConsequenceSpace::ConsequenceSpace(int degree, EchelonBasis basis) : space_(degree), basis_(std::move(basis)) {
    basis_.finalize();
    for (std::uint32_t c = 0; c < space_.dim(); ++c)
        if (!basis_.is_pivot(c)) free_.push_back(c);
}

SparseVec ConsequenceSpace::residual_of_column(std::uint32_t col) const {
    if (!basis_.is_pivot(col)) return {{col, Rational(1)}};
    const auto& rows = basis_.rows();
    auto it = std::lower_bound(rows.begin(), rows.end(), col,
                               [](const SparseVec& r, std::uint32_t c) { return r.front().first < c; });
    SparseVec out;
    for (std::size_t i = 1; i < it->size(); ++i) out.emplace_back((*it)[i].first, -(*it)[i].second);
    return out;
}

std::vector<Expr> ConsequenceSpace::rows_as_exprs() const {
    std::vector<Expr> out;
    for (const auto& r : basis_.rows()) out.push_back(space_.to_expr(r));
    return out;
}

bool ConsequenceSpace::same_subspace(const ConsequenceSpace& o) const {
    return degree() == o.degree() && basis_.rows() == o.basis_.rows();
}

namespace {

std::string system_key(const IdentitySystem& sys) {
    std::vector<std::string> parts;
    for (const auto& id : sys.identities) parts.push_back(id.expr.to_string());
    std::sort(parts.begin(), parts.end());
    std::string key;
    for (const auto& p : parts) key += p + ";";
    return key;
}

struct Cache {
    std::mutex mu;
    std::map<std::string, std::vector<ConsequenceSpacePtr>> towers;  // index n-1
};

Cache& cache() {
    static Cache c;
    return c;
}

// Rel(m) from Rel(m-1) and the degree-m identities.
ConsequenceSpacePtr next_degree(const IdentitySystem& sys, const ConsequenceSpace* prev, int m) {
    MultilinearSpace space(m);
    EchelonBasis basis(space.dim());

    // Relabel a word's leaves by the transposition (k m); k == m is the identity.
    auto swap_leaves = [m](std::vector<int> leaves, int k) {
        if (k != m)
            for (int& v : leaves) {
                if (v == k) v = m;
                else if (v == m) v = k;
            }
        return leaves;
    };

    auto insert_closed = [&](const std::vector<std::pair<Word, Rational>>& terms) {
        // The generating families below are S_{m-1}-stable, so coset
        // representatives of S_{m-1} in S_m complete the closure.
        for (int k = m; k >= 1; --k) {
            SparseVec v;
            v.reserve(terms.size());
            for (const auto& [w, c] : terms) v.emplace_back(space.column(w.with_leaves(swap_leaves(w.leaves(), k))), c);
            std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            // merge duplicate columns
            SparseVec merged;
            for (auto& e : v) {
                if (!merged.empty() && merged.back().first == e.first) {
                    merged.back().second += e.second;
                    if (merged.back().second.is_zero()) merged.pop_back();
                } else {
                    merged.push_back(std::move(e));
                }
            }
            if (!merged.empty()) basis.insert(merged);
        }
    };

    if (prev != nullptr && prev->dim() > 0) {
        const MultilinearSpace& ps = prev->space();
        const Word xm = Word::leaf(m);
        for (const auto& row : prev->basis().rows()) {
            std::vector<std::pair<Word, Rational>> words;
            words.reserve(row.size());
            for (const auto& [c, x] : row) words.emplace_back(ps.word(c), x);

            std::vector<std::pair<Word, Rational>> lifted;
            lifted.reserve(words.size());
            for (const auto& [w, c] : words) lifted.emplace_back(Word::product(xm, w), c);
            insert_closed(lifted);
            lifted.clear();
            for (const auto& [w, c] : words) lifted.emplace_back(Word::product(w, xm), c);
            insert_closed(lifted);
            // x_i -> (x_i x_m)
            for (int i = 1; i < m; ++i) {
                lifted.clear();
                for (const auto& [w, c] : words) {
                    std::string shape;
                    shape.reserve(w.shape().size() + 2);
                    std::vector<int> leaves;
                    leaves.reserve(static_cast<std::size_t>(m));
                    std::size_t li = 0;
                    for (char s : w.shape()) {
                        if (s == 'n') {
                            shape += 'n';
                            continue;
                        }
                        int v = w.leaves()[li++];
                        if (v == i) {
                            shape += "nll";
                            leaves.push_back(i);
                            leaves.push_back(m);
                        } else {
                            shape += 'l';
                            leaves.push_back(v);
                        }
                    }
                    lifted.emplace_back(Word::from_shape(std::move(shape), std::move(leaves)), c);
                }
                insert_closed(lifted);
            }
        }
    }

    for (const auto& id : sys.identities) {
        if (id.degree != m) continue;
        for (const auto& p : Permutation::all(m)) {
            Expr e = apply_permutation(id.expr, p);
            SparseVec v = space.to_vector(e);
            if (!v.empty()) basis.insert(v);
        }
    }
    return std::make_shared<const ConsequenceSpace>(m, std::move(basis));
}

}  // namespace

ConsequenceSpacePtr consequences(const IdentitySystem& sys, int n) {
    check_degree(n);
    for (const auto& id : sys.identities)
        if (!id.is_multilinear()) throw NotMultilinear("identity is not multilinear: " + id.to_string());

    const std::string key = system_key(sys);
    auto& c = cache();
    std::unique_lock lock(c.mu);
    auto& tower = c.towers[key];
    while (static_cast<int>(tower.size()) < n) {
        int m = static_cast<int>(tower.size()) + 1;
        const ConsequenceSpace* prev = tower.empty() ? nullptr : tower.back().get();
        tower.push_back(next_degree(sys, prev, m));
    }
    return tower[static_cast<std::size_t>(n - 1)];
}

void clear_consequence_cache() {
    auto& c = cache();
    std::lock_guard lock(c.mu);
    c.towers.clear();
}

std::size_t multilinear_dim(const IdentitySystem& sys, int n) { return consequences(sys, n)->codim(); }

VarietyProfile profile(const IdentitySystem& sys, int N) {
    VarietyProfile p{sys.name, {}, SeriesQ(static_cast<std::size_t>(N))};
    for (int n = 1; n <= N; ++n) {
        std::size_t d = multilinear_dim(sys, n);
        p.dims.push_back(d);
        Rational c(static_cast<long>(d));
        c /= Rational(static_cast<long>(factorial(n)));
        p.series[static_cast<std::size_t>(n)] = (n % 2 == 0) ? c : -c;
    }
    return p;
}

SeriesQ hilbert(const IdentitySystem& sys, int N) { return profile(sys, N).series; }

SeriesQ koszulity_residual(const IdentitySystem& p, const IdentitySystem& q, int N) {
    return compose_series(hilbert(p, N), hilbert(q, N)) - SeriesQ::t(static_cast<std::size_t>(N));
}

bool implies(const IdentitySystem& a, const IdentitySystem& b, int n) {
    auto ca = consequences(a, n);
    auto cb = consequences(b, n);
    for (const auto& row : cb->basis().rows())
        if (!ca->contains(row)) return false;
    return true;
}

bool prove_zero(const Expr& e, const IdentitySystem& sys) {
    std::map<int, Expr> by_degree;
    for (const auto& [w, c] : e.terms()) by_degree[w.degree()].add(w, c);
    for (const auto& [d, comp] : by_degree) {
        check_degree(d);
        Identity id = Identity::from_expr(comp);
        for (const auto& m : multilinearize(id))
            if (!consequences(sys, *m.degree)->contains(m.expr)) return false;
    }
    return true;
}

std::optional<int> nice_index(const IdentitySystem& sys, int kmax) {
    for (int k = 3; k <= kmax; ++k) {
        auto cs = consequences(sys, k);
        if (cs->codim() != 1) continue;
        // RREF rows are e_p + r e_b for the single free column b; every
        // monomial equals the basis word exactly when each r is -1.
        bool all_equal = true;
        for (const auto& row : cs->basis().rows()) {
            if (row.size() != 2 || row[1].second != Rational(-1)) {
                all_equal = false;
                break;
            }
        }
        if (all_equal) return k;
    }
    return std::nullopt;
}

}  // namespace nassoc
