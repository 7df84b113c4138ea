#pragma once

#include "enriques7/gaussian.hpp"

#include <vector>

namespace enr7 {

using QiVec = std::vector<Qi>;
using QiMat = std::vector<QiVec>; // row major

// Reduce to row echelon form in place; returns the pivot column of each
// surviving row. Pivot choice is the first row with a nonzero entry, so the
// result is deterministic.
inline std::vector<int> row_echelon(QiMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Qi inv = Qi(1) / m[r][c];
        for (size_t j = c; j < cols; ++j)
            m[r][j] = m[r][j] * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Qi f = m[i][c];
            for (size_t j = c; j < cols; ++j)
                m[i][j] = m[i][j] - f * m[r][j];
        }
        pivots.push_back(int(c));
        ++r;
    }
    return pivots;
}

inline int rank(QiMat m) {
    return int(row_echelon(m).size());
}

// Basis of the right kernel {v : M v = 0}, one vector per free column, in
// increasing free-column order. Free coordinate set to 1.
inline std::vector<QiVec> kernel_basis(QiMat m) {
    if (m.empty()) return {};
    size_t cols = m[0].size();
    std::vector<int> pivots = row_echelon(m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<QiVec> basis;
    for (size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        QiVec v(cols, Qi(0));
        v[fc] = Qi(1);
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m[r][fc];
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace enr7
