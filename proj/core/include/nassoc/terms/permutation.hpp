#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace nassoc {

// Bijection of {1..n}; image(i) = p(i).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);
    // Cycle notation such as "(1 2 3)" or "(1 2)(3 4)"; n is the degree.
    static Permutation from_cycles(std::string_view text, int n);
    // The k-th permutation of {1..n} in lexicographic order.
    static Permutation unrank(int n, std::uint64_t k);
    // All permutations of {1..n} in lexicographic order.
    static std::vector<Permutation> all(int n);

    int size() const { return static_cast<int>(p_.size()); }
    int operator()(int i) const { return p_.at(static_cast<std::size_t>(i - 1)); }
    const std::vector<int>& images() const { return p_; }
    int sign() const;
    Permutation inverse() const;
    std::uint64_t rank() const;

    // (p * q)(i) = p(q(i)).
    friend Permutation operator*(const Permutation& p, const Permutation& q);
    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

    std::string to_string() const;

private:
    std::vector<int> p_;
};

std::uint64_t factorial(int n);
// Lexicographic rank of a permutation given as a sequence of distinct values 1..n.
std::uint64_t lehmer_rank(const std::vector<int>& seq);

}  // namespace nassoc
