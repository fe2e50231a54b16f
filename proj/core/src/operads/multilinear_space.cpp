#include "nassoc/operads/multilinear_space.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "nassoc/error.hpp"

namespace nassoc {

int degree_cap() {
    const char* env = std::getenv("NASSOC_DEGREE_CAP");
    if (!env || !*env) return kDefaultDegreeCap;
    int v = std::atoi(env);
    if (v < 1) return kDefaultDegreeCap;
    return std::min(v, kMaxDegree);
}

void check_degree(int n) {
    if (n < 1) throw DegreeTooLarge("degree must be at least 1");
    if (n > kMaxDegree) throw DegreeTooLarge("degree " + std::to_string(n) + " exceeds the hard limit 8");
    if (n > degree_cap())
        throw DegreeTooLarge("degree " + std::to_string(n) + " exceeds the cap " + std::to_string(degree_cap()) +
                             " (raise NASSOC_DEGREE_CAP; expensive)");
}

std::size_t multilinear_space_dim(int n) { return static_cast<std::size_t>(factorial(n)) * catalan(n - 1); }

MultilinearSpace::MultilinearSpace(int n)
    : n_(n), shapes_(catalan(n - 1)), fact_(static_cast<std::size_t>(factorial(n))), dim_(shapes_ * fact_) {
    if (n < 1 || n > kMaxDegree) throw DegreeTooLarge("multilinear space degree out of range");
}

std::uint32_t MultilinearSpace::column(const Word& w) const {
    if (w.degree() != n_) throw NotMultilinear("word degree does not match the space");
    std::uint32_t seen = 0;
    for (int v : w.leaves()) {
        if (v < 1 || v > n_ || (seen >> v) & 1u) throw NotMultilinear("word is not multilinear in x1..x" + std::to_string(n_));
        seen |= 1u << v;
    }
    return static_cast<std::uint32_t>(shape_index(w.shape()) * fact_ + lehmer_rank(w.leaves()));
}

Word MultilinearSpace::word(std::uint32_t column) const {
    if (column >= dim_) throw IndexOutOfRange("column out of range");
    const auto& shape = shapes_of_degree(n_)[column / fact_];
    return Word::from_shape(shape, Permutation::unrank(n_, column % fact_).images());
}

SparseVec MultilinearSpace::to_vector(const Expr& e) const {
    SparseVec v;
    v.reserve(e.size());
    for (const auto& [w, c] : e.terms()) v.emplace_back(column(w), c);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

Expr MultilinearSpace::to_expr(const SparseVec& v) const {
    Expr e;
    for (const auto& [c, x] : v) e.add(word(c), x);
    return e;
}

}  // namespace nassoc
