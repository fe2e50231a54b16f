#include "nassoc/exact/sparse.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "nassoc/error.hpp"

namespace nassoc {

SparseVec sparse_axpy(const SparseVec& a, const Rational& s, const SparseVec& b) {
    SparseVec out;
    out.reserve(a.size() + b.size());
    auto i = a.begin(), j = b.begin();
    while (i != a.end() || j != b.end()) {
        if (j == b.end() || (i != a.end() && i->first < j->first)) {
            out.push_back(*i++);
        } else if (i == a.end() || j->first < i->first) {
            out.emplace_back(j->first, s * j->second);
            ++j;
        } else {
            Rational v = i->second;
            v.addmul(s, j->second);
            if (!v.is_zero()) out.emplace_back(i->first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

SparseVec sparse_scale(SparseVec v, const Rational& s) {
    if (s.is_zero()) return {};
    for (auto& e : v) e.second *= s;
    return v;
}

EchelonBasis::EchelonBasis(std::size_t ncols)
    : ncols_(ncols), pivot_row_(ncols, -1), acc_(ncols), queued_(ncols, 0) {}

SparseVec EchelonBasis::reduce_impl(const SparseVec& v) const {
    std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> heap;
    for (const auto& [c, x] : v) {
        if (c >= ncols_) throw IndexOutOfRange("sparse column out of range");
        acc_[c] = x;
        queued_[c] = 1;
        heap.push(c);
    }
    SparseVec out;
    while (!heap.empty()) {
        std::uint32_t c = heap.top();
        heap.pop();
        queued_[c] = 0;
        if (acc_[c].is_zero()) continue;
        std::int32_t r = pivot_row_[c];
        if (r < 0) {
            out.emplace_back(c, acc_[c]);
            acc_[c] = Rational(0);
            continue;
        }
        Rational f = acc_[c];
        for (const auto& [col, x] : rows_[static_cast<std::size_t>(r)]) {
            acc_[col].submul(f, x);
            if (!queued_[col] && col != c) {
                queued_[col] = 1;
                heap.push(col);
            }
        }
        acc_[c] = Rational(0);
    }
    return out;
}

SparseVec EchelonBasis::reduce(const SparseVec& v) const {
    if (!finalized_) return reduce_impl(v);
    // Fully reduced rows: one pass over the pivot entries of v suffices.
    SparseVec out = v;
    for (const auto& [c, x] : v) {
        std::int32_t r = pivot_row_[c];
        if (r >= 0) out = sparse_axpy(out, -x, rows_[static_cast<std::size_t>(r)]);
    }
    return out;
}

bool EchelonBasis::insert(const SparseVec& v) {
    SparseVec r = reduce_impl(v);
    if (r.empty()) return false;
    Rational inv = r.front().second.inverse();
    for (auto& e : r) e.second *= inv;
    if (finalized_) {
        // Keep the basis fully reduced.
        std::uint32_t p = r.front().first;
        for (auto& row : rows_) {
            auto it = std::lower_bound(row.begin(), row.end(), p,
                                       [](const auto& e, std::uint32_t col) { return e.first < col; });
            if (it != row.end() && it->first == p) row = sparse_axpy(row, -it->second, r);
        }
    }
    pivot_row_[r.front().first] = static_cast<std::int32_t>(rows_.size());
    rows_.push_back(std::move(r));
    if (finalized_) {
        finalized_ = false;
        finalize();
    }
    return true;
}

void EchelonBasis::finalize() {
    if (finalized_) return;
    std::sort(rows_.begin(), rows_.end(), [](const SparseVec& a, const SparseVec& b) { return a.front().first < b.front().first; });
    for (std::size_t i = 0; i < rows_.size(); ++i) pivot_row_[rows_[i].front().first] = static_cast<std::int32_t>(i);
    // Back substitution from the last pivot upwards.
    for (std::size_t i = rows_.size(); i-- > 0;) {
        SparseVec& row = rows_[i];
        SparseVec out;
        out.reserve(row.size());
        bool changed = false;
        for (const auto& e : row)
            if (e.first != row.front().first && pivot_row_[e.first] >= 0) changed = true;
        if (!changed) continue;
        // Rows below i are already fully reduced, so one pass suffices.
        out = row;
        for (const auto& [c, x] : row) {
            if (c == row.front().first) continue;
            std::int32_t r = pivot_row_[c];
            if (r >= 0) out = sparse_axpy(out, -x, rows_[static_cast<std::size_t>(r)]);
        }
        row = std::move(out);
    }
    finalized_ = true;
}

std::vector<std::uint32_t> EchelonBasis::pivots() const {
    std::vector<std::uint32_t> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(r.front().first);
    if (!finalized_) std::sort(out.begin(), out.end());
    return out;
}

}  // namespace nassoc
