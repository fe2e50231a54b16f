#include "nassoc/exact/matrix.hpp"

#include <gmpxx.h>

namespace nassoc {

RrefResult rref(const MatrixQ& m) {
    const std::size_t R = m.rows(), C = m.cols();
    // Scale each row to integers.
    std::vector<std::vector<mpz_class>> a(R, std::vector<mpz_class>(C));
    for (std::size_t i = 0; i < R; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < C; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).raw().get_den_mpz_t());
        for (std::size_t j = 0; j < C; ++j) {
            const mpq_class& q = m(i, j).raw();
            a[i][j] = q.get_num() * (l / q.get_den());
        }
    }

    std::vector<std::size_t> pivots;
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t p = r;
        while (p < R && a[p][c] == 0) ++p;
        if (p == R) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < R; ++i) {
            for (std::size_t j = c + 1; j < C; ++j) {
                a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        pivots.push_back(c);
        ++r;
    }

    MatrixQ out(r, C);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < C; ++j) out(i, j) = Rational(mpq_class(a[i][j]));
    for (std::size_t i = r; i-- > 0;) {
        Rational inv = out(i, pivots[i]).inverse();
        for (std::size_t j = 0; j < C; ++j) out(i, j) *= inv;
        for (std::size_t k = 0; k < i; ++k) {
            Rational f = out(k, pivots[i]);
            if (f.is_zero()) continue;
            for (std::size_t j = pivots[i]; j < C; ++j) out(k, j).submul(f, out(i, j));
        }
    }
    return {std::move(out), std::move(pivots)};
}

std::size_t rank(const MatrixQ& m) { return rref(m).pivots.size(); }

std::vector<VectorQ> nullspace(const MatrixQ& m) {
    RrefResult r = rref(m);
    const std::size_t C = m.cols();
    std::vector<bool> is_pivot(C, false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<VectorQ> basis;
    for (std::size_t f = 0; f < C; ++f) {
        if (is_pivot[f]) continue;
        VectorQ v(C, Rational(0));
        v[f] = Rational(1);
        for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.rows(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool in_row_space(const RrefResult& r, std::span<const Rational> v) {
    VectorQ w(v.begin(), v.end());
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
        Rational f = w[r.pivots[i]];
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < w.size(); ++j) w[j].submul(f, r.rows(i, j));
    }
    for (const auto& x : w)
        if (!x.is_zero()) return false;
    return true;
}

}  // namespace nassoc
