#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "nassoc/exact/rational.hpp"

namespace nassoc {

// Sparse rational vector, entries sorted by column with no explicit zeros.
using SparseVec = std::vector<std::pair<std::uint32_t, Rational>>;

SparseVec sparse_axpy(const SparseVec& a, const Rational& s, const SparseVec& b);  // a + s*b
SparseVec sparse_scale(SparseVec v, const Rational& s);

// Incrementally built echelon basis of a subspace of Q^ncols.  Rows are kept
// with leading coefficient 1 and reduced against earlier pivots on insertion;
// finalize() back-substitutes to reduced row echelon form.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t ncols);

    std::size_t ncols() const { return ncols_; }
    std::size_t rank() const { return rows_.size(); }

    // Returns true when v was independent of the current rows.
    bool insert(const SparseVec& v);
    // Residual of v after reduction by all rows (zero iff v is in the span).
    SparseVec reduce(const SparseVec& v) const;
    bool contains(const SparseVec& v) const { return reduce(v).empty(); }

    void finalize();
    bool finalized() const { return finalized_; }

    // Rows in increasing pivot order (valid after finalize()).
    const std::vector<SparseVec>& rows() const { return rows_; }
    std::vector<std::uint32_t> pivots() const;
    bool is_pivot(std::uint32_t col) const { return pivot_row_[col] >= 0; }

private:
    SparseVec reduce_impl(const SparseVec& v) const;

    std::size_t ncols_;
    std::vector<SparseVec> rows_;
    std::vector<std::int32_t> pivot_row_;
    bool finalized_ = false;

    // Scratch space for reductions.
    mutable std::vector<Rational> acc_;
    mutable std::vector<char> queued_;
};

}  // namespace nassoc
