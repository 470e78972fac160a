/*
   Copyright 2026 the maxkernel authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Dense Gaussian elimination over F_p on uint16 digit matrices (row-major).

#ifndef MAXKERNEL_FP_LINALG_HPP
#define MAXKERNEL_FP_LINALG_HPP

#include <vector>

#include "field.hpp"

namespace mk {

// Reduces mat in place to row echelon form; returns the rank.
inline int row_echelon(std::vector<digit>& mat, int rows, int cols, const ModP& mp,
                       const std::vector<digit>& inv_table) {
    int rank = 0;
    const std::uint64_t p = mp.p;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r) {
            if (mat[(std::size_t)r * cols + col] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rank) {
            for (int c = col; c < cols; ++c)
                std::swap(mat[(std::size_t)pivot * cols + c], mat[(std::size_t)rank * cols + c]);
        }
        digit* prow = &mat[(std::size_t)rank * cols];
        std::uint64_t pinv = inv_table[prow[col]];
        if (pinv != 1) {
            for (int c = col; c < cols; ++c)
                prow[c] = (digit)mp.reduce(prow[c] * pinv);
        }
        for (int r = rank + 1; r < rows; ++r) {
            digit* row = &mat[(std::size_t)r * cols];
            std::uint64_t f = row[col];
            if (f == 0) continue;
            std::uint64_t nf = p - f;
            for (int c = col; c < cols; ++c)
                row[c] = (digit)mp.reduce(row[c] + nf * prow[c]);
        }
        ++rank;
    }
    return rank;
}

inline int rank_of(std::vector<digit> mat, int rows, int cols, const ModP& mp,
                   const std::vector<digit>& inv_table) {
    return row_echelon(mat, rows, cols, mp, inv_table);
}

// Reduces mat in place to reduced row echelon form; returns rank and fills
// the pivot column of each of the first rank rows.
inline int reduced_row_echelon(std::vector<digit>& mat, int rows, int cols, const ModP& mp,
                               const std::vector<digit>& inv_table,
                               std::vector<int>* pivots_out = nullptr) {
    int rank = row_echelon(mat, rows, cols, mp, inv_table);
    std::vector<int> pivot_col(rank);
    for (int r = 0; r < rank; ++r) {
        int c = 0;
        while (mat[(std::size_t)r * cols + c] == 0) ++c;
        pivot_col[r] = c;
    }
    const std::uint64_t p = mp.p;
    for (int r = rank - 1; r >= 0; --r) {
        int pc = pivot_col[r];
        for (int above = 0; above < r; ++above) {
            digit* row = &mat[(std::size_t)above * cols];
            std::uint64_t f = row[pc];
            if (f == 0) continue;
            std::uint64_t nf = p - f;
            const digit* prow = &mat[(std::size_t)r * cols];
            for (int c = pc; c < cols; ++c)
                row[c] = (digit)mp.reduce(row[c] + nf * prow[c]);
        }
    }
    if (pivots_out) *pivots_out = pivot_col;
    return rank;
}

// Basis of {x : A x = 0}, vectors of length cols. Consumes a copy of A.
inline std::vector<std::vector<digit>> nullspace(std::vector<digit> mat, int rows, int cols,
                                                 const ModP& mp,
                                                 const std::vector<digit>& inv_table) {
    std::vector<int> pivot_col;
    int rank = reduced_row_echelon(mat, rows, cols, mp, inv_table, &pivot_col);
    const std::uint64_t p = mp.p;
    std::vector<bool> is_pivot(cols, false);
    for (int r = 0; r < rank; ++r) is_pivot[pivot_col[r]] = true;
    std::vector<std::vector<digit>> basis;
    basis.reserve(cols - rank);
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<digit> v(cols, 0);
        v[free] = 1;
        for (int r = 0; r < rank; ++r) {
            std::uint64_t entry = mat[(std::size_t)r * cols + free];
            if (entry) v[pivot_col[r]] = (digit)(p - entry);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace mk

#endif
