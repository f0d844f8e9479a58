#pragma once

// Exact linear feasibility over Q: does A x = b, x >= 0 have a solution?
// Phase-one simplex on a dense tableau with Bland's rule, so it terminates
// without any tolerance.

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace dualschubert::lp {

using Rational = mpq_class;
using Matrix = std::vector<std::vector<Rational>>;

/// Returns a nonnegative solution of A x = b if one exists.
inline bool feasible(const Matrix& a, const std::vector<Rational>& b, std::vector<Rational>* solution = nullptr) {
    const std::size_t rows = a.size();
    if (b.size() != rows) throw std::invalid_argument("lp: right-hand side size mismatch");
    const std::size_t cols = rows ? a.front().size() : 0;
    for (const auto& r : a)
        if (r.size() != cols) throw std::invalid_argument("lp: ragged matrix");

    // Columns: [0, cols) originals, [cols, cols+rows) artificials, last is rhs.
    const std::size_t width = cols + rows + 1;
    Matrix t(rows, std::vector<Rational>(width, 0));
    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        const bool flip = b[i] < 0;
        for (std::size_t j = 0; j < cols; ++j) t[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
        t[i][cols + i] = 1;
        t[i][width - 1] = flip ? Rational(-b[i]) : b[i];
        basis[i] = cols + i;
    }
    // Reduced cost row for minimizing the sum of artificials.
    std::vector<Rational> cost(width, 0);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < width; ++j)
            if (j < cols || j == width - 1) cost[j] -= t[i][j];

    for (;;) {
        std::size_t enter = width;
        for (std::size_t j = 0; j + 1 < width; ++j) {
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter == width) break;

        std::size_t leave = rows;
        Rational best;
        for (std::size_t i = 0; i < rows; ++i) {
            if (t[i][enter] <= 0) continue;
            Rational ratio = t[i][width - 1] / t[i][enter];
            if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        // Phase one is bounded below by zero, so an entering column always has a pivot.
        if (leave == rows) break;

        Rational piv = t[leave][enter];
        for (auto& v : t[leave]) v /= piv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Rational f = t[i][enter];
            for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
        }
        if (cost[enter] != 0) {
            Rational f = cost[enter];
            for (std::size_t j = 0; j < width; ++j) cost[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }

    // Optimum of phase one is -cost[rhs]; feasible iff it is zero.
    if (cost[width - 1] != 0) return false;
    if (solution) {
        solution->assign(cols, 0);
        for (std::size_t i = 0; i < rows; ++i)
            if (basis[i] < cols) (*solution)[basis[i]] = t[i][width - 1];
    }
    return true;
}

}  // namespace dualschubert::lp
