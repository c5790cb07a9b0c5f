#pragma once

#include "scalar.hpp"

#include <vector>

namespace xlag {

using Matrix = std::vector<std::vector<Scalar>>;  // row-major

// Basis of the right null space of A (rows × cols) by exact Gauss-Jordan elimination.
inline std::vector<std::vector<Scalar>> nullspace(Matrix a, size_t cols) {
    const size_t rows = a.size();
    std::vector<int> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        Scalar inv = 1 / a[r][c];
        for (size_t k = c; k < cols; ++k) a[r][k] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Scalar f = a[i][c];
            for (size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
        }
        pivot_col.push_back(static_cast<int>(c));
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(cols, Scalar(0));
        v[f] = 1;
        for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -a[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace xlag
