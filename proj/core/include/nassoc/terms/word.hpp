#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nassoc {

// A full binary tree with generator indices on its leaves.  The tree is kept
// as a preorder shape code ('n' = internal node, 'l' = leaf) and the leaf
// labels from left to right.
class Word {
public:
    static Word leaf(int var);
    static Word product(const Word& a, const Word& b);
    static Word from_shape(std::string shape, std::vector<int> leaves);

    int degree() const { return static_cast<int>(leaves_.size()); }
    bool is_leaf() const { return leaves_.size() == 1; }
    const std::string& shape() const { return shape_; }
    const std::vector<int>& leaves() const { return leaves_; }
    // Left and right factors of a non-leaf word.
    std::pair<Word, Word> split() const;
    Word with_leaves(std::vector<int> leaves) const;

    // "x1", "(x1 x2)", "((x1 x2) x3)".
    std::string to_string() const;

    friend bool operator==(const Word&, const Word&) = default;
    // Degree, then shape (larger left subtree first), then leaves.
    friend std::strong_ordering operator<=>(const Word& a, const Word& b);

private:
    std::string shape_;
    std::vector<int> leaves_;
};

// Length of the subtree code starting at `pos`.
std::size_t subtree_length(std::string_view shape, std::size_t pos);
std::strong_ordering compare_shapes(std::string_view a, std::string_view b);
// All shapes with n leaves in canonical order (cached).
const std::vector<std::string>& shapes_of_degree(int n);
std::size_t shape_index(std::string_view shape);
std::size_t catalan(int n);

}  // namespace nassoc
