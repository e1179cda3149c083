#pragma once

#include <optional>
#include <vector>

#include "setconj/rational.hpp"

namespace setconj {

// Exact Gauss-Jordan utilities on row lists.  Rows may carry extra columns
// (augmented systems); `ncols` bounds the pivot search.

struct Rref {
    std::vector<RatVec> rows;      // nonzero rows, pivots scaled to 1
    std::vector<std::size_t> pivot_cols;
};

// Reduced row echelon form over the first `ncols` columns.  Columns past
// ncols ride along as augmentation.
inline Rref rref(std::vector<RatVec> rows, std::size_t ncols) {
    Rref out;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < ncols && pivot_row < rows.size(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[pivot_row], rows[sel]);
        Rat inv = Rat(1) / rows[pivot_row][col];
        for (auto& x : rows[pivot_row]) x *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == pivot_row || rows[r][col] == 0) continue;
            Rat f = rows[r][col];
            for (std::size_t c = 0; c < rows[r].size(); ++c) rows[r][c] -= f * rows[pivot_row][c];
        }
        out.pivot_cols.push_back(col);
        ++pivot_row;
    }
    rows.resize(pivot_row);
    out.rows = std::move(rows);
    return out;
}

inline std::size_t rank(const std::vector<RatVec>& rows, std::size_t ncols) {
    return rref(rows, ncols).pivot_cols.size();
}

// Basis of {x : Ax = 0} via back-substitution of the free columns.
inline std::vector<RatVec> null_space(const std::vector<RatVec>& a_rows, std::size_t ncols) {
    Rref r = rref(a_rows, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (std::size_t free_col = 0; free_col < ncols; ++free_col) {
        if (is_pivot[free_col]) continue;
        RatVec v(ncols);
        v[free_col] = 1;
        for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
            v[r.pivot_cols[i]] = -r.rows[i][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Row space basis (the RREF rows restricted to the leading ncols columns).
inline std::vector<RatVec> row_space(const std::vector<RatVec>& a_rows, std::size_t ncols) {
    Rref r = rref(a_rows, ncols);
    for (auto& row : r.rows) row.resize(ncols);
    return r.rows;
}

// One solution of Ax = b, or nullopt when inconsistent.
inline std::optional<RatVec> solve_linear(const std::vector<RatVec>& a_rows, const RatVec& b,
                                          std::size_t ncols) {
    std::vector<RatVec> aug = a_rows;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    Rref r = rref(aug, ncols);
    RatVec x(ncols);
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        bool zero_lhs = true;
        for (std::size_t c = 0; c < ncols; ++c)
            if (r.rows[i][c] != 0) { zero_lhs = false; break; }
        if (zero_lhs) {
            if (r.rows[i][ncols] != 0) return std::nullopt;
            continue;
        }
    }
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) x[r.pivot_cols[i]] = r.rows[i][ncols];
    return x;
}

// Inverse of a square matrix given as rows; nullopt when singular.
inline std::optional<std::vector<RatVec>> invert(const std::vector<RatVec>& rows) {
    std::size_t n = rows.size();
    std::vector<RatVec> aug(n, RatVec(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = rows[i][j];
        aug[i][n + i] = 1;
    }
    Rref r = rref(std::move(aug), n);
    if (r.pivot_cols.size() != n) return std::nullopt;
    std::vector<RatVec> inv(n, RatVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = r.rows[i][n + j];
    return inv;
}

} // namespace setconj
