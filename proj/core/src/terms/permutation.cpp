#include "nassoc/terms/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "nassoc/error.hpp"

namespace nassoc {

Permutation::Permutation(std::vector<int> images) : p_(std::move(images)) {
    std::vector<char> seen(p_.size() + 1, 0);
    for (int v : p_) {
        if (v < 1 || v > static_cast<int>(p_.size()) || seen[static_cast<std::size_t>(v)])
            throw IndexOutOfRange("not a permutation");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::from_cycles(std::string_view text, int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        if (text[i] != '(') throw ParseError("expected '(' in cycle notation", i);
        std::size_t open = i++;
        std::vector<int> cycle;
        while (i < text.size() && text[i] != ')') {
            if (std::isdigit(static_cast<unsigned char>(text[i]))) {
                int v = 0;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
                if (v < 1 || v > n) throw IndexOutOfRange("cycle entry out of range");
                cycle.push_back(v);
            } else if (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',') {
                ++i;
            } else {
                throw ParseError("unexpected character in cycle", i);
            }
        }
        if (i >= text.size()) throw UnbalancedParens("unterminated cycle", open);
        ++i;
        for (std::size_t k = 0; k < cycle.size(); ++k)
            img[static_cast<std::size_t>(cycle[k] - 1)] = cycle[(k + 1) % cycle.size()];
    }
    return Permutation(std::move(img));
}

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
    return f;
}

Permutation Permutation::unrank(int n, std::uint64_t k) {
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> out;
    out.reserve(pool.size());
    for (int i = n; i >= 1; --i) {
        std::uint64_t f = factorial(i - 1);
        auto idx = static_cast<std::size_t>(k / f);
        k %= f;
        out.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return Permutation(std::move(out));
}

std::vector<Permutation> Permutation::all(int n) {
    std::vector<Permutation> out;
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do out.emplace_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

int Permutation::sign() const {
    std::vector<char> seen(p_.size(), 0);
    int s = 1;
    for (std::size_t i = 0; i < p_.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p_[j] - 1)) {
            seen[j] = 1;
            ++len;
        }
        if (len % 2 == 0) s = -s;
    }
    return s;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(p_.size());
    for (std::size_t i = 0; i < p_.size(); ++i) inv[static_cast<std::size_t>(p_[i] - 1)] = static_cast<int>(i + 1);
    return Permutation(std::move(inv));
}

std::uint64_t lehmer_rank(const std::vector<int>& seq) {
    const int n = static_cast<int>(seq.size());
    std::uint64_t r = 0;
    std::uint32_t used = 0;
    for (int i = 0; i < n; ++i) {
        int v = seq[static_cast<std::size_t>(i)];
        int smaller = __builtin_popcount(~used & ((1u << (v - 1)) - 1u));
        r += static_cast<std::uint64_t>(smaller) * factorial(n - 1 - i);
        used |= 1u << (v - 1);
    }
    return r;
}

std::uint64_t Permutation::rank() const { return lehmer_rank(p_); }

Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) throw DimensionMismatch("permutation sizes differ");
    std::vector<int> out(p.p_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = p.p_[static_cast<std::size_t>(q.p_[i] - 1)];
    return Permutation(std::move(out));
}

std::string Permutation::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < p_.size(); ++i) out += (i ? " " : "") + std::to_string(p_[i]);
    return out + "]";
}

}  // namespace nassoc
