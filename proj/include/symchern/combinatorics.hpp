#pragma once

#include "symchern/exact.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <iterator>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace symchern {

// ---------------------------------------------------------------------------
// Partitions and weak compositions
// ---------------------------------------------------------------------------

class Partition {
public:
    Partition() = default;

    // Parts are sorted into weakly decreasing order; zero parts are dropped.
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (int p : parts_)
            if (p < 0)
                throw std::invalid_argument("partition with a negative part");
        std::erase(parts_, 0);
        std::sort(parts_.begin(), parts_.end(), std::greater<>());
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int largest() const { return parts_.empty() ? 0 : parts_.front(); }
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    // m_i for i = 1..largest(); index 0 unused.
    std::vector<int> multiplicities() const
    {
        std::vector<int> m(largest() + 1, 0);
        for (int p : parts_)
            ++m[p];
        return m;
    }

    Partition conjugate() const
    {
        std::vector<int> c(largest(), 0);
        for (int p : parts_)
            for (int i = 0; i < p; ++i)
                ++c[i];
        return Partition(std::move(c));
    }

    std::string str() const
    {
        std::string s = "[";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i)
                s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + "]";
    }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// All partitions of k, in reverse lexicographic order ((k) first).
// Optional bounds on the number of parts and on the largest part.
inline std::vector<Partition> partitions_of(int k, int max_length = -1, int max_part = -1)
{
    std::vector<Partition> out;
    if (k < 0)
        return out;
    if (max_length < 0)
        max_length = k;
    if (max_part < 0)
        max_part = k;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int cap) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == max_length)
            return;
        for (int p = std::min(remaining, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(k, max_part);
    return out;
}

struct WeakComposition {
    std::vector<int> entries;

    int sum() const { return std::accumulate(entries.begin(), entries.end(), 0); }
    auto operator<=>(const WeakComposition&) const = default;
};

// Lexicographic enumeration of A_{n,d} = {alpha in Z_{>=0}^n : |alpha| = d}.
class WeakCompositions {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = WeakComposition;
        using difference_type = std::ptrdiff_t;
        using pointer = const WeakComposition*;
        using reference = const WeakComposition&;

        iterator() = default;
        iterator(int n, int d) : done_(false)
        {
            cur_.entries.assign(n, 0);
            cur_.entries.back() = d;
        }

        reference operator*() const { return cur_; }
        pointer operator->() const { return &cur_; }

        iterator& operator++()
        {
            auto& e = cur_.entries;
            const int n = static_cast<int>(e.size());
            int suffix = e[n - 1];
            for (int i = n - 2; i >= 0; --i) {
                if (suffix > 0) {
                    ++e[i];
                    std::fill(e.begin() + i + 1, e.end() - 1, 0);
                    e[n - 1] = suffix - 1;
                    return *this;
                }
                suffix += e[i];
            }
            done_ = true;
            return *this;
        }
        iterator operator++(int)
        {
            iterator t = *this;
            ++*this;
            return t;
        }

        bool operator==(const iterator& o) const
        {
            if (done_ || o.done_)
                return done_ == o.done_;
            return cur_ == o.cur_;
        }

    private:
        WeakComposition cur_;
        bool done_ = true;
    };

    WeakCompositions(int n, int d) : n_(n), d_(d)
    {
        if (n < 1)
            throw std::invalid_argument("weak_compositions: n must be positive");
        if (d < 0)
            throw std::invalid_argument("weak_compositions: d must be nonnegative");
    }

    iterator begin() const { return iterator(n_, d_); }
    iterator end() const { return iterator(); }

    // |A_{n,d}| = C(d+n-1, n-1)
    Integer count() const { return binomial(Integer(d_ + n_ - 1), n_ - 1); }

private:
    int n_;
    int d_;
};

inline WeakCompositions weak_compositions(int n, int d) { return WeakCompositions(n, d); }

// ---------------------------------------------------------------------------
// Memoized number triangles
// ---------------------------------------------------------------------------

namespace detail {

// Row-by-row memo table. Row n is produced from rows 0..n-1 by the supplied
// builder. Concurrent readers share a lock; growth takes the exclusive lock
// and is idempotent.
class RowTable {
public:
    using Builder = std::function<std::vector<Integer>(const std::vector<std::vector<Integer>>&, int)>;

    explicit RowTable(Builder b) : build_(std::move(b)) {}

    Integer get(int n, int k)
    {
        if (n < 0 || k < 0)
            return 0;
        {
            std::shared_lock lock(mu_);
            if (n < static_cast<int>(rows_.size()))
                return lookup(n, k);
        }
        std::unique_lock lock(mu_);
        while (static_cast<int>(rows_.size()) <= n)
            rows_.push_back(build_(rows_, static_cast<int>(rows_.size())));
        return lookup(n, k);
    }

private:
    Integer lookup(int n, int k) const
    {
        const auto& row = rows_[n];
        return k < static_cast<int>(row.size()) ? row[k] : Integer(0);
    }

    Builder build_;
    std::vector<std::vector<Integer>> rows_;
    std::shared_mutex mu_;
};

inline Integer at(const std::vector<std::vector<Integer>>& rows, int n, int k)
{
    if (n < 0 || k < 0 || n >= static_cast<int>(rows.size()))
        return 0;
    const auto& row = rows[n];
    return k < static_cast<int>(row.size()) ? row[k] : Integer(0);
}

inline RowTable& stirling1_table()
{
    static RowTable table([](const auto& rows, int n) {
        std::vector<Integer> row(n + 1);
        if (n == 0) {
            row[0] = 1;
            return row;
        }
        for (int k = 1; k <= n; ++k)
            row[k] = at(rows, n - 1, k - 1) + (n - 1) * at(rows, n - 1, k);
        return row;
    });
    return table;
}

inline RowTable& stirling2_table()
{
    static RowTable table([](const auto& rows, int q) {
        std::vector<Integer> row(q + 1);
        if (q == 0) {
            row[0] = 1;
            return row;
        }
        for (int r = 1; r <= q; ++r)
            row[r] = at(rows, q - 1, r - 1) + r * at(rows, q - 1, r);
        return row;
    });
    return table;
}

inline RowTable& derangement_table()
{
    // D(N,K) = (N-1)(D(N-1,K-1) + D(N-2,K-1)), D(0,0) = 1.
    static RowTable table([](const auto& rows, int N) {
        std::vector<Integer> row(N + 1);
        if (N == 0) {
            row[0] = 1;
            return row;
        }
        for (int K = 1; K <= N; ++K)
            row[K] = (N - 1) * (at(rows, N - 1, K - 1) + at(rows, N - 2, K - 1));
        return row;
    });
    return table;
}

} // namespace detail

// Unsigned Stirling numbers of the first kind: permutations of n letters with
// k cycles. Negative arguments give 0.
inline Integer stirling1_unsigned(int n, int k) { return detail::stirling1_table().get(n, k); }

// Stirling numbers of the second kind: partitions of a q-set into r blocks.
inline Integer stirling2(int q, int r) { return detail::stirling2_table().get(q, r); }

// Fixed-point-free permutations of N letters with N-K cycles.
inline Integer defect_derangements(int N, int K) { return detail::derangement_table().get(N, K); }

inline Integer multinomial(int total, const std::vector<int>& parts)
{
    Integer r = factorial(total);
    for (int p : parts)
        r /= factorial(p);
    return r;
}

} // namespace symchern
