#include "nassoc/terms/word.hpp"

#include <map>
#include <mutex>
#include <unordered_map>

#include "nassoc/error.hpp"

namespace nassoc {

Word Word::leaf(int var) {
    if (var < 1) throw IndexOutOfRange("variable index must be positive");
    Word w;
    w.shape_ = "l";
    w.leaves_ = {var};
    return w;
}

Word Word::product(const Word& a, const Word& b) {
    Word w;
    w.shape_.reserve(1 + a.shape_.size() + b.shape_.size());
    w.shape_ = "n" + a.shape_ + b.shape_;
    w.leaves_ = a.leaves_;
    w.leaves_.insert(w.leaves_.end(), b.leaves_.begin(), b.leaves_.end());
    return w;
}

Word Word::from_shape(std::string shape, std::vector<int> leaves) {
    if (shape.empty() || subtree_length(shape, 0) != shape.size() || (shape.size() + 1) / 2 != leaves.size())
        throw ShapeMismatch("invalid word shape");
    Word w;
    w.shape_ = std::move(shape);
    w.leaves_ = std::move(leaves);
    return w;
}

std::size_t subtree_length(std::string_view shape, std::size_t pos) {
    std::size_t need = 1, i = pos;
    while (need > 0) {
        if (i >= shape.size()) throw ShapeMismatch("truncated shape code");
        need += shape[i++] == 'n' ? 1 : -1;
    }
    return i - pos;
}

std::pair<Word, Word> Word::split() const {
    if (is_leaf()) throw ShapeMismatch("cannot split a leaf");
    std::size_t ll = subtree_length(shape_, 1);
    std::size_t left_leaves = (ll + 1) / 2;
    Word a, b;
    a.shape_ = shape_.substr(1, ll);
    b.shape_ = shape_.substr(1 + ll);
    a.leaves_.assign(leaves_.begin(), leaves_.begin() + static_cast<std::ptrdiff_t>(left_leaves));
    b.leaves_.assign(leaves_.begin() + static_cast<std::ptrdiff_t>(left_leaves), leaves_.end());
    return {std::move(a), std::move(b)};
}

Word Word::with_leaves(std::vector<int> leaves) const {
    if (leaves.size() != leaves_.size()) throw ShapeMismatch("leaf count mismatch");
    Word w;
    w.shape_ = shape_;
    w.leaves_ = std::move(leaves);
    return w;
}

namespace {
void print(const std::string& shape, const std::vector<int>& leaves, std::size_t& s, std::size_t& l, std::string& out) {
    if (shape[s++] == 'l') {
        out += 'x' + std::to_string(leaves[l++]);
        return;
    }
    out += '(';
    print(shape, leaves, s, l, out);
    out += ' ';
    print(shape, leaves, s, l, out);
    out += ')';
}
}  // namespace

std::string Word::to_string() const {
    std::string out;
    std::size_t s = 0, l = 0;
    print(shape_, leaves_, s, l, out);
    return out;
}

std::strong_ordering compare_shapes(std::string_view a, std::string_view b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    if (a.size() == 1) return std::strong_ordering::equal;
    std::size_t la = subtree_length(a, 1), lb = subtree_length(b, 1);
    if (la != lb) return lb <=> la;  // larger left subtree sorts first
    if (auto c = compare_shapes(a.substr(1, la), b.substr(1, lb)); c != 0) return c;
    return compare_shapes(a.substr(1 + la), b.substr(1 + lb));
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.leaves_.size() <=> b.leaves_.size(); c != 0) return c;
    if (a.shape_ != b.shape_) return compare_shapes(a.shape_, b.shape_);
    return a.leaves_ <=> b.leaves_;
}

namespace {
struct ShapeTables {
    std::mutex mu;
    std::map<int, std::vector<std::string>> by_degree;
    std::unordered_map<std::string, std::size_t> index;
};

ShapeTables& tables() {
    static ShapeTables t;
    return t;
}

const std::vector<std::string>& shapes_locked(ShapeTables& t, int n) {
    auto it = t.by_degree.find(n);
    if (it != t.by_degree.end()) return it->second;
    std::vector<std::string> out;
    if (n == 1) {
        out.push_back("l");
    } else {
        for (int left = n - 1; left >= 1; --left) {
            const auto& ls = shapes_locked(t, left);
            const auto& rs = shapes_locked(t, n - left);
            for (const auto& a : ls)
                for (const auto& b : rs) out.push_back("n" + a + b);
        }
    }
    for (std::size_t i = 0; i < out.size(); ++i) t.index.emplace(out[i], i);
    return t.by_degree.emplace(n, std::move(out)).first->second;
}
}  // namespace

const std::vector<std::string>& shapes_of_degree(int n) {
    if (n < 1 || n > 12) throw DegreeTooLarge("shape degree out of range");
    auto& t = tables();
    std::lock_guard lock(t.mu);
    return shapes_locked(t, n);
}

std::size_t shape_index(std::string_view shape) {
    int n = static_cast<int>((shape.size() + 1) / 2);
    shapes_of_degree(n);
    auto& t = tables();
    std::lock_guard lock(t.mu);
    auto it = t.index.find(std::string(shape));
    if (it == t.index.end()) throw ShapeMismatch("unknown shape code");
    return it->second;
}

std::size_t catalan(int n) {
    std::size_t c = 1;
    for (int k = 0; k < n; ++k) c = c * 2 * (2 * static_cast<std::size_t>(k) + 1) / (static_cast<std::size_t>(k) + 2);
    return c;
}

}  // namespace nassoc
