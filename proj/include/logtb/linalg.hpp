#pragma once

#include <optional>
#include <vector>

#include "logtb/errors.hpp"
#include "logtb/exact_complex.hpp"

namespace logtb::exact {

/// Row rank by Gaussian elimination over an exact field F (Rational, QuadExt,
/// ExactComplex). Rows may have any length but must all agree.
template <class F>
int row_rank(std::vector<std::vector<F>> rows) {
    if (rows.empty()) return 0;
    const size_t cols = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != cols) throw DimensionMismatch("row_rank: vectors of unequal length");

    int rank = 0;
    size_t col = 0;
    while (rank < int(rows.size()) && col < cols) {
        int pivot = -1;
        for (int r = rank; r < int(rows.size()); ++r) {
            if (!(rows[r][col] == F(0))) { pivot = r; break; }
        }
        if (pivot < 0) { ++col; continue; }
        std::swap(rows[rank], rows[pivot]);
        const F inv = F(1) / rows[rank][col];
        for (size_t c = col; c < cols; ++c) rows[rank][c] = rows[rank][c] * inv;
        for (int r = 0; r < int(rows.size()); ++r) {
            if (r == rank) continue;
            const F factor = rows[r][col];
            if (factor == F(0)) continue;
            for (size_t c = col; c < cols; ++c)
                rows[r][c] = rows[r][c] - factor * rows[rank][c];
        }
        ++rank;
        ++col;
    }
    return rank;
}

/// Solve A x = b over field F for rectangular A (given as rows). Returns the
/// unique solution on the pivot variables with free variables set to zero,
/// or nullopt when inconsistent.
template <class F>
std::optional<std::vector<F>> solve_linear(std::vector<std::vector<F>> a, std::vector<F> b) {
    const int m = int(a.size());
    if (int(b.size()) != m) throw DimensionMismatch("solve_linear: rhs length");
    const int n = m == 0 ? 0 : int(a[0].size());
    for (const auto& r : a)
        if (int(r.size()) != n) throw DimensionMismatch("solve_linear: ragged matrix");

    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < n && rank < m; ++col) {
        int pivot = -1;
        for (int r = rank; r < m; ++r)
            if (!(a[r][col] == F(0))) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        std::swap(b[rank], b[pivot]);
        const F inv = F(1) / a[rank][col];
        for (int c = col; c < n; ++c) a[rank][c] = a[rank][c] * inv;
        b[rank] = b[rank] * inv;
        for (int r = 0; r < m; ++r) {
            if (r == rank) continue;
            const F factor = a[r][col];
            if (factor == F(0)) continue;
            for (int c = col; c < n; ++c) a[r][c] = a[r][c] - factor * a[rank][c];
            b[r] = b[r] - factor * b[rank];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (int r = rank; r < m; ++r)
        if (!(b[r] == F(0))) return std::nullopt;

    std::vector<F> x(n, F(0));
    for (int r = 0; r < rank; ++r) x[pivot_col[r]] = b[r];
    return x;
}

/// Rank over R of complex vectors, computed as the rank over Q(sqrt d) of the
/// realified 2n-vectors (rank does not change under field extension, so this
/// equals the real rank exactly).
int real_rank(const std::vector<std::vector<ExactComplex>>& vectors);

/// Rank of the vectors over the coefficient field Q(sqrt d)(i).
int complex_rank(const std::vector<std::vector<ExactComplex>>& vectors);

}  // namespace logtb::exact
