#pragma once

// Dense exact linear algebra over Rational, sized for transition matrices
// of symmetric-function bases and small determinants.

#include "symchern/exact.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace symchern {

using RationalMatrix = std::vector<std::vector<Rational>>;

inline Rational determinant(RationalMatrix a)
{
    const std::size_t n = a.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0)
            ++pivot;
        if (pivot == n)
            return 0;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t row = col + 1; row < n; ++row) {
            if (a[row][col] == 0)
                continue;
            Rational f = a[row][col] / a[col][col];
            for (std::size_t j = col; j < n; ++j)
                a[row][j] -= f * a[col][j];
        }
    }
    return det;
}

// Reduced row echelon form of the augmented system [a | b]; returns a solution
// with free variables set to 0, or nullopt if the system is inconsistent.
inline std::optional<std::vector<Rational>> solve_consistent(RationalMatrix a, std::vector<Rational> b)
{
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        Rational inv = 1 / a[r][c];
        for (std::size_t j = c; j < cols; ++j)
            a[r][j] *= inv;
        b[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0)
                continue;
            Rational f = a[i][c];
            for (std::size_t j = c; j < cols; ++j)
                a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (b[i] != 0)
            return std::nullopt;
    std::vector<Rational> x(cols, Rational(0));
    for (std::size_t i = 0; i < pivot_cols.size(); ++i)
        x[pivot_cols[i]] = b[i];
    return x;
}

inline std::size_t rank(RationalMatrix a)
{
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][c] == 0)
                continue;
            Rational f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j)
                a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

// Inverse of a square nonsingular matrix; throws std::domain_error if singular.
inline RationalMatrix inverse(const RationalMatrix& a)
{
    const std::size_t n = a.size();
    RationalMatrix aug(n, std::vector<Rational>(2 * n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n)
            throw std::invalid_argument("inverse: matrix is not square");
        for (std::size_t j = 0; j < n; ++j)
            aug[i][j] = a[i][j];
        aug[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && aug[p][c] == 0)
            ++p;
        if (p == n)
            throw std::domain_error("inverse: singular matrix");
        std::swap(aug[p], aug[c]);
        Rational inv = 1 / aug[c][c];
        for (auto& v : aug[c])
            v *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || aug[i][c] == 0)
                continue;
            Rational f = aug[i][c];
            for (std::size_t j = 0; j < 2 * n; ++j)
                aug[i][j] -= f * aug[c][j];
        }
    }
    RationalMatrix out(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out[i][j] = aug[i][n + j];
    return out;
}

} // namespace symchern
