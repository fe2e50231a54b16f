#include "nassoc/algebras/linear.hpp"

#include "nassoc/error.hpp"

namespace nassoc {

Subspace Subspace::span(std::size_t ambient, const std::vector<VectorQ>& vectors) {
    Subspace s(ambient);
    if (vectors.empty()) return s;
    MatrixQ m(vectors.size(), ambient);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != ambient) throw DimensionMismatch("vector length does not match ambient space");
        for (std::size_t j = 0; j < ambient; ++j) m(i, j) = vectors[i][j];
    }
    RrefResult r = rref(m);
    for (std::size_t i = 0; i < r.rows.rows(); ++i) {
        auto row = r.rows.row(i);
        s.basis_.emplace_back(row.begin(), row.end());
    }
    s.pivots_ = std::move(r.pivots);
    return s;
}

Subspace Subspace::whole(std::size_t ambient) {
    Subspace s(ambient);
    for (std::size_t i = 0; i < ambient; ++i) {
        VectorQ v(ambient);
        v[i] = Rational(1);
        s.basis_.push_back(std::move(v));
        s.pivots_.push_back(i);
    }
    return s;
}

Subspace Subspace::kernel(const MatrixQ& m) {
    return span(m.cols(), nullspace(m));
}

VectorQ Subspace::reduce(std::span<const Rational> v) const {
    if (v.size() != n_) throw DimensionMismatch("vector length does not match ambient space");
    VectorQ r(v.begin(), v.end());
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        Rational f = r[pivots_[i]];
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < n_; ++j)
            if (!basis_[i][j].is_zero()) r[j].submul(f, basis_[i][j]);
    }
    return r;
}

bool Subspace::contains(std::span<const Rational> v) const {
    VectorQ r = reduce(v);
    for (const auto& x : r)
        if (!x.is_zero()) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    for (const auto& v : other.basis_)
        if (!contains(v)) return false;
    return true;
}

VectorQ Subspace::coordinates(std::span<const Rational> v) const {
    if (!contains(v)) throw DimensionMismatch("vector is not in the subspace");
    VectorQ c;
    c.reserve(pivots_.size());
    for (auto p : pivots_) c.push_back(v[p]);
    return c;
}

Subspace operator+(const Subspace& a, const Subspace& b) {
    if (a.n_ != b.n_) throw DimensionMismatch("subspaces of different ambient spaces");
    std::vector<VectorQ> all = a.basis_;
    all.insert(all.end(), b.basis_.begin(), b.basis_.end());
    return Subspace::span(a.n_, all);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.n_ != b.n_) throw DimensionMismatch("subspaces of different ambient spaces");
    if (a.is_zero() || b.is_zero()) return Subspace(a.n_);
    // x = sum s_i a_i = sum t_j b_j; solve [A^T | -B^T] (s, t) = 0.
    const std::size_t da = a.dim(), db = b.dim();
    MatrixQ m(a.n_, da + db);
    for (std::size_t k = 0; k < a.n_; ++k) {
        for (std::size_t i = 0; i < da; ++i) m(k, i) = a.basis_[i][k];
        for (std::size_t j = 0; j < db; ++j) m(k, da + j) = -b.basis_[j][k];
    }
    std::vector<VectorQ> out;
    for (const auto& s : nullspace(m)) {
        VectorQ x(a.n_);
        for (std::size_t i = 0; i < da; ++i)
            if (!s[i].is_zero())
                for (std::size_t k = 0; k < a.n_; ++k) x[k].addmul(s[i], a.basis_[i][k]);
        out.push_back(std::move(x));
    }
    return Subspace::span(a.n_, out);
}

std::string Subspace::to_string() const {
    if (basis_.empty()) return "0";
    std::string out = "<";
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        out += i ? ", (" : "(";
        for (std::size_t j = 0; j < n_; ++j) out += (j ? " " : "") + basis_[i][j].to_string();
        out += ")";
    }
    return out + ">";
}

}  // namespace nassoc
