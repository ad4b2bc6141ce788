#pragma once

// Positivity and log-concavity predicates on finite exact sequences.
// Empty and all-zero sequences are vacuously nonnegative and log-concave.

#include "symchern/exact.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace symchern {

// [first, last] nonzero indices, or nullopt for an all-zero sequence.
template <class T>
std::optional<std::pair<std::size_t, std::size_t>> nonzero_support(std::span<const T> seq)
{
    std::optional<std::pair<std::size_t, std::size_t>> s;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (seq[i] == 0)
            continue;
        if (!s)
            s = std::pair{i, i};
        s->second = i;
    }
    return s;
}

template <class T>
bool is_nonnegative(std::span<const T> seq)
{
    for (const auto& v : seq)
        if (v < 0)
            return false;
    return true;
}

// Contiguous nonzero support and b_r^2 >= b_{r-1} b_{r+1} on it.
template <class T>
bool is_log_concave(std::span<const T> seq)
{
    auto s = nonzero_support(seq);
    if (!s)
        return true;
    auto [lo, hi] = *s;
    for (std::size_t i = lo; i <= hi; ++i)
        if (seq[i] == 0)
            return false;
    for (std::size_t i = lo + 1; i < hi; ++i)
        if (seq[i] * seq[i] < seq[i - 1] * seq[i + 1])
            return false;
    return true;
}

// f(p) f(q) >= f(p-1) f(q+1) for all p <= q; terms outside the range are 0.
template <class T>
bool is_strongly_log_concave(std::span<const T> seq)
{
    const auto n = static_cast<std::ptrdiff_t>(seq.size());
    auto f = [&](std::ptrdiff_t i) -> T { return (i < 0 || i >= n) ? T(0) : seq[i]; };
    for (std::ptrdiff_t p = 0; p < n; ++p)
        for (std::ptrdiff_t q = p; q < n; ++q)
            if (f(p) * f(q) < f(p - 1) * f(q + 1))
                return false;
    return true;
}

template <class T>
bool is_nonnegative(const std::vector<T>& seq) { return is_nonnegative(std::span<const T>(seq)); }
template <class T>
bool is_log_concave(const std::vector<T>& seq) { return is_log_concave(std::span<const T>(seq)); }
template <class T>
bool is_strongly_log_concave(const std::vector<T>& seq)
{
    return is_strongly_log_concave(std::span<const T>(seq));
}

// Drops leading zeroes.
template <class T>
std::vector<T> strip_initial_zeroes(const std::vector<T>& seq)
{
    std::size_t i = 0;
    while (i < seq.size() && seq[i] == 0)
        ++i;
    return {seq.begin() + static_cast<std::ptrdiff_t>(i), seq.end()};
}

} // namespace symchern
