#include "nassoc/operads/normal_form.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>

#include "nassoc/error.hpp"
#include "nassoc/exact/matrix.hpp"
#include "nassoc/operads/consequences.hpp"
#include "nassoc/terms/systems.hpp"

namespace nassoc {

std::string to_string(Variety v) { return v == Variety::SAs ? "sas" : "cas"; }

Variety parse_variety(std::string_view name) {
    if (name == "sas" || name == "SAs") return Variety::SAs;
    if (name == "cas" || name == "CAs") return Variety::CAs;
    throw Error("unknown variety '" + std::string(name) + "' (expected sas or cas)");
}

IdentitySystem variety_system(Variety v) { return builtin_system(to_string(v)); }

namespace {

Word right_normed(const std::vector<int>& leaves) {
    Word w = Word::leaf(leaves.back());
    for (std::size_t i = leaves.size() - 1; i-- > 0;) w = Word::product(Word::leaf(leaves[i]), w);
    return w;
}

Word rn(std::initializer_list<int> leaves) { return right_normed(std::vector<int>(leaves)); }

// Multilinear basis patterns on y1..yn.
std::vector<BasisLabel> patterns(Variety v, int n) {
    std::vector<BasisLabel> out;
    if (n == 1) return {{Word::leaf(1), false}};
    if (n == 2) return {{rn({1, 2}), false}, {rn({2, 1}), false}};
    if (n == 3) {
        if (v == Variety::SAs) {
            for (const auto& p : Permutation::all(3)) out.push_back({right_normed(p.images()), false});
        } else {
            out = {{rn({1, 2, 3}), false}, {rn({1, 3, 2}), false}};
        }
        return out;
    }
    if (n == 4 && v == Variety::SAs) {
        // i < j < k < l  ->  1 2 3 4
        for (auto l : {std::vector<int>{1, 2, 3, 4}, {1, 2, 4, 3}, {1, 3, 2, 4}, {1, 3, 4, 2}, {1, 4, 2, 3},
                       {1, 4, 3, 2}, {2, 1, 3, 4}, {2, 1, 4, 3}, {2, 3, 4, 1}, {2, 4, 3, 1}, {3, 2, 4, 1},
                       {4, 2, 3, 1}})
            out.push_back({right_normed(l), false});
        return out;
    }
    std::vector<int> l(static_cast<std::size_t>(n));
    std::iota(l.begin(), l.end(), 1);
    return {{right_normed(l), true}};
}

// Coordinates of degree-n multilinear residuals in the pattern basis.
struct Table {
    ConsequenceSpacePtr space;
    std::vector<BasisLabel> labels;
    std::map<std::uint32_t, std::size_t> free_index;
    MatrixQ inv;  // residual coords (free columns) -> label coords
};

const Table& table(Variety v, int n) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<Table>> tables;
    std::lock_guard lock(mu);
    auto key = std::make_pair(static_cast<int>(v), n);
    auto it = tables.find(key);
    if (it != tables.end()) return *it->second;

    auto t = std::make_unique<Table>();
    t->space = consequences(variety_system(v), n);
    t->labels = patterns(v, n);
    const auto& fc = t->space->free_columns();
    for (std::size_t i = 0; i < fc.size(); ++i) t->free_index[fc[i]] = i;
    const std::size_t d = fc.size();
    if (t->labels.size() != d)
        throw VerificationFailed("basis pattern count " + std::to_string(t->labels.size()) +
                                 " differs from the quotient dimension " + std::to_string(d));
    MatrixQ m(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        SparseVec r = t->space->residual(t->space->space().to_vector(t->labels[i].expand()));
        for (const auto& [c, x] : r) m(i, t->free_index.at(c)) = x;
    }
    try {
        t->inv = inverse(m);
    } catch (const DivisionByZero&) {
        throw VerificationFailed("basis patterns are linearly dependent at degree " + std::to_string(n));
    }
    return *tables.emplace(key, std::move(t)).first->second;
}

// Multilinear lift: positions sorted by generator (stable) get y1..yn.
// Returns the lifted word and the sorted generator list (y_r -> gens[r-1]).
std::pair<Word, std::vector<int>> lift(const Word& w) {
    const auto& leaves = w.leaves();
    std::vector<std::size_t> order(leaves.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return leaves[a] < leaves[b]; });
    std::vector<int> y(leaves.size()), gens(leaves.size());
    for (std::size_t r = 0; r < order.size(); ++r) {
        y[order[r]] = static_cast<int>(r + 1);
        gens[r] = leaves[order[r]];
    }
    return {w.with_leaves(std::move(y)), std::move(gens)};
}

BasisLabel specialise(const BasisLabel& b, const std::vector<int>& gens) {
    std::vector<int> l = b.word.leaves();
    for (int& v : l) v = gens[static_cast<std::size_t>(v - 1)];
    if (b.circ) std::sort(l.begin(), l.end());
    return {b.word.with_leaves(std::move(l)), b.circ};
}

}  // namespace

Expr BasisLabel::expand() const {
    if (!circ) return Expr(word);
    const auto& l = word.leaves();
    Expr acc = Expr::var(l.back());
    for (std::size_t i = l.size() - 1; i-- > 0;) acc = nassoc::circ(Expr::var(l[i]), acc);
    return acc;
}

std::string BasisLabel::to_string() const {
    if (!circ) return word.to_string();
    const auto& l = word.leaves();
    std::string out = "x" + std::to_string(l.back());
    for (std::size_t i = l.size() - 1; i-- > 0;) out = "(x" + std::to_string(l[i]) + " o " + out + ")";
    return out;
}

Expr NormalForm::expand() const {
    Expr out;
    for (const auto& [b, c] : terms) out += b.expand() * c;
    return out;
}

std::string NormalForm::to_string() const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [b, c] : terms) {
        bool neg = c.sign() < 0;
        Rational a = c.abs();
        std::string body = a.is_one() ? b.to_string() : a.to_string() + "*" + b.to_string();
        if (out.empty()) out = neg ? "-" + body : body;
        else out += (neg ? " - " : " + ") + body;
    }
    return out;
}

NormalForm normal_form(Variety v, const Expr& e) {
    std::map<BasisLabel, Rational> acc;
    for (const auto& [w, c] : e.terms()) {
        const int n = w.degree();
        check_degree(n);
        const Table& t = table(v, n);
        auto [y, gens] = lift(w);
        SparseVec r = t.space->residual_of_column(t.space->space().column(y));
        for (std::size_t j = 0; j < t.labels.size(); ++j) {
            Rational coef(0);
            for (const auto& [col, x] : r) coef.addmul(x, t.inv(t.free_index.at(col), j));
            if (coef.is_zero()) continue;
            acc[specialise(t.labels[j], gens)] += coef * c;
        }
    }
    NormalForm nf;
    for (auto& [b, c] : acc)
        if (!c.is_zero()) nf.terms.emplace_back(b, c);
    return nf;
}

NormalForm sas_normal_form(const Expr& e) { return normal_form(Variety::SAs, e); }
NormalForm cas_normal_form(const Expr& e) { return normal_form(Variety::CAs, e); }

FreeBasis free_basis(Variety v, int n, int k, bool multilinear) {
    if (n < 1 || n > kMaxDegree) throw DegreeTooLarge("free_basis degree out of range");
    FreeBasis fb;
    if (multilinear) {
        fb.labels = patterns(v, n);
    } else {
        if (k < 1) throw Error("free_basis needs at least one generator");
        std::set<BasisLabel> seen;
        std::vector<int> g(static_cast<std::size_t>(n), 1);
        auto pats = patterns(v, n);
        for (;;) {
            for (const auto& p : pats) seen.insert(specialise(p, g));
            // next nondecreasing tuple
            int i = n - 1;
            while (i >= 0 && g[static_cast<std::size_t>(i)] == k) --i;
            if (i < 0) break;
            int val = g[static_cast<std::size_t>(i)] + 1;
            for (int j = i; j < n; ++j) g[static_cast<std::size_t>(j)] = val;
        }
        fb.labels.assign(seen.begin(), seen.end());
    }
    fb.count = fb.labels.size();
    return fb;
}

}  // namespace nassoc
