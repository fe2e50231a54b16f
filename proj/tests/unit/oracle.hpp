#pragma once

// Independent exact helpers for tests: plain Gaussian elimination on mpq_class,
// written without the library's matrix code.

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace oracle {

using Row = std::vector<mpq_class>;

inline std::size_t rank(std::vector<Row> m) {
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            mpq_class f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

inline unsigned long factorial(int n) { return n <= 1 ? 1UL : n * factorial(n - 1); }

inline unsigned long catalan(int n) {
    unsigned long c = 1;
    for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
    return c;
}

// Dimension of the derivation algebra of c (c[i][j][k] = coefficient of e_k in
// e_i e_j): nullity of the n^3 x n^2 system D(e_i e_j) = D(e_i) e_j + e_i D(e_j),
// unknown d[a][b] = coefficient of e_a in D(e_b).
inline std::size_t derivation_dim(const std::vector<std::vector<std::vector<mpq_class>>>& c) {
    const std::size_t n = c.size();
    std::vector<Row> eqs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Row row(n * n, 0);
                for (std::size_t m = 0; m < n; ++m) row[k * n + m] += c[i][j][m];  // D(e_i e_j)_k
                for (std::size_t a = 0; a < n; ++a) {
                    row[a * n + i] -= c[a][j][k];  // D(e_i) e_j
                    row[a * n + j] -= c[i][a][k];  // e_i D(e_j)
                }
                eqs.push_back(row);
            }
    return n * n - rank(eqs);
}

}  // namespace oracle
