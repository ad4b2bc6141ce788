#pragma once

// Rank two: c_k(2,d) = sum_j A_{k,j}(d) s_(k-j,j)(x1,x2), the binomial-basis
// coefficients B_{k,j,r} of A_{k,j}(d), their closed forms through defect
// derangements, and the scans and identities built on them.

#include "symchern/binomial_series.hpp"
#include "symchern/combinatorics.hpp"
#include "symchern/parallel.hpp"
#include "symchern/report.hpp"
#include "symchern/sequences.hpp"
#include "symchern/symfunc.hpp"
#include "symchern/upoly.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace symchern {

// C_{k,d}(u) = e_k(i + (d-i)u : 0 <= i <= d), directly from the roots.
inline UPoly c_poly_rank2_roots(int k, int d)
{
    if (k < 0 || d < 0)
        throw std::invalid_argument("c_poly_rank2: negative argument");
    std::vector<UPoly> e(static_cast<std::size_t>(k + 1));
    e[0] = UPoly::constant(1);
    for (int i = 0; i <= d; ++i) {
        UPoly root({Rational(i), Rational(d - i)});
        for (int j = k; j >= 1; --j)
            e[static_cast<std::size_t>(j)] += e[static_cast<std::size_t>(j - 1)] * root;
    }
    return e[static_cast<std::size_t>(k)];
}

// sum_s [d+1, d+1-k+s] C(d+1-k+s, s) d^s u^s (1-u)^{k-s}
inline UPoly c_poly_rank2_stirling(int k, int d)
{
    if (k < 0 || d < 0)
        throw std::invalid_argument("c_poly_rank2: negative argument");
    UPoly out;
    const UPoly one_minus_u({Rational(1), Rational(-1)});
    for (int s = 0; s <= k; ++s) {
        Integer c = stirling1_unsigned(d + 1, d + 1 - k + s);
        if (c == 0)
            continue;
        c *= binomial(Integer(d + 1 - k + s), s) * pow(Integer(d), static_cast<unsigned long>(s));
        if (c != 0)
            out += UPoly::monomial(static_cast<std::size_t>(s), Rational(c)) *
                   one_minus_u.pow(static_cast<unsigned>(k - s));
    }
    return out;
}

inline UPoly c_poly_rank2(int k, int d) { return c_poly_rank2_stirling(k, d); }

// A_{k,j}(d) = sum_{s<=j} (-1)^{j-s} C(k-s+1, j-s) d^s C(d+1-k+s, s) [d+1, d+1-k+s].
// For j > floor(k/2) this is still [u^j](1-u) C_{k,d}(u); the recurrences
// for j = 2 use those values (A_{2,2} = -A_{2,1}, A_{3,2} = A_{1,1} = 0).
inline Integer a_value(int k, int j, int d)
{
    if (k < 0 || j < 0 || d < 0)
        throw std::invalid_argument("a_value: negative argument");
    Integer acc = 0;
    for (int s = 0; s <= j; ++s) {
        Integer st = stirling1_unsigned(d + 1, d + 1 - k + s);
        if (st == 0)
            continue;
        Integer term = binomial(Integer(k - s + 1), j - s) * pow(Integer(d), static_cast<unsigned long>(s)) *
                       binomial(Integer(d + 1 - k + s), s) * st;
        acc += ((j - s) % 2) ? Integer(-term) : term;
    }
    return acc;
}

// Same quantity through the roots and the Schur extraction.
inline Integer a_value_oracle(int k, int j, int d)
{
    UPoly c = c_poly_rank2_roots(k, d);
    Rational v = j <= k / 2 ? schur_rank2_extract(c, k)[static_cast<std::size_t>(j)]
                            : (UPoly({Rational(1), Rational(-1)}) * c)[static_cast<std::size_t>(j)];
    return to_integer(v);
}

struct RankTwoRow {
    int k = 0, j = 0;
    UPoly A;
    BinomialSeries B;
};

namespace detail {

inline RankTwoRow build_row(int k, int j)
{
    // deg_d A_{k,j} <= 2k; sample 2k+2 points and confirm two more.
    const int samples = 2 * k + 2;
    std::vector<std::pair<Rational, Rational>> pts;
    for (int d = 0; d < samples; ++d)
        pts.emplace_back(Rational(d), Rational(a_value(k, j, d)));
    UPoly a = interpolate(pts);
    for (int d = samples; d < samples + 2; ++d)
        if (a(Rational(d)) != Rational(a_value(k, j, d)))
            throw std::runtime_error("row(" + std::to_string(k) + "," + std::to_string(j) +
                                     "): interpolant fails validation at d=" + std::to_string(d));
    return {k, j, a, to_binomial_basis(a)};
}

class RowCache {
public:
    static RowCache& instance()
    {
        static RowCache c;
        return c;
    }

    RankTwoRow get(int k, int j)
    {
        {
            std::lock_guard lock(mu_);
            auto it = rows_.find({k, j});
            if (it != rows_.end())
                return it->second;
        }
        RankTwoRow r = build_row(k, j);
        std::lock_guard lock(mu_);
        return rows_.try_emplace({k, j}, std::move(r)).first->second;
    }

private:
    std::mutex mu_;
    std::map<std::pair<int, int>, RankTwoRow> rows_;
};

} // namespace detail

// A_{k,j} as a polynomial in d together with its binomial-basis coefficients.
// Accepts 0 <= j <= k+1; beyond floor(k/2) see a_value.
inline RankTwoRow row(int k, int j)
{
    if (k < 0 || j < 0 || j > k + 1)
        throw std::invalid_argument("row: need 0 <= j <= k+1");
    return detail::RowCache::instance().get(k, j);
}

inline UPoly a_poly(int k, int j)
{
    if (k < 0 || j < 0)
        return {};
    if (j > k + 1)
        return {};
    return row(k, j).A;
}

// B_{k,0,r} = D(r,k) + D(r+1,k)
inline Integer b0_closed(int k, int r) { return defect_derangements(r, k) + defect_derangements(r + 1, k); }

// The four terms of B_{k,1,r}, in the order D(r+1,k-1), D(r,k-1), D(r-1,k-1), D(r-2,k-1).
inline std::vector<Integer> b1_terms(int k, int r)
{
    const Integer R(r), K(k);
    return {
        R * (R + 2 - K) * defect_derangements(r + 1, k - 1),
        R * (3 * R + 2 - 3 * K) * defect_derangements(r, k - 1),
        (3 * R * R - 3 * K * R - 2 * R + K + 1) * defect_derangements(r - 1, k - 1),
        (R - 1) * (R - K - 1) * defect_derangements(r - 2, k - 1),
    };
}

inline Integer b1_closed(int k, int r)
{
    Integer acc = 0;
    for (const auto& t : b1_terms(k, r))
        acc += t;
    return acc;
}

inline BinomialSeries b0_row(int k)
{
    std::vector<Rational> b;
    for (int r = 0; r <= 2 * k + 1; ++r)
        b.emplace_back(b0_closed(k, r));
    return BinomialSeries(std::move(b));
}

inline BinomialSeries b1_row(int k)
{
    std::vector<Rational> b;
    for (int r = 0; r <= 2 * k + 2; ++r)
        b.emplace_back(b1_closed(k, r));
    return BinomialSeries(std::move(b));
}

// P_k(t) = t^2 d/dt((1+t) P_{k-1}(t)), P_0 = 1.
inline UPoly p_genpoly(int k)
{
    if (k < 0)
        throw std::invalid_argument("p_genpoly: negative k");
    UPoly p = UPoly::constant(1);
    const UPoly t2 = UPoly::monomial(2);
    const UPoly one_plus_t({Rational(1), Rational(1)});
    for (int i = 1; i <= k; ++i)
        p = t2 * derivative(one_plus_t * p);
    return p;
}

namespace detail {

inline std::string series_values(const BinomialSeries& b) { return b.str(); }

inline std::vector<std::pair<int, int>> scan_cells(int kmax, int jmax)
{
    std::vector<std::pair<int, int>> cells;
    for (int k = 1; k <= kmax; ++k)
        for (int j = 0; j <= std::min(jmax, k / 2); ++j)
            cells.emplace_back(k, j);
    return cells;
}

// Scans rows for a predicate. Failures for j <= proven_j are counterexamples;
// failures beyond are recorded as findings, since those cases are open.
template <class Pred>
VerificationReport scan_rows(const std::string& target, int kmax, int jmax, int proven_j, int workers, Pred pred)
{
    Stopwatch sw;
    VerificationReport rep;
    rep.target = target;
    rep.range = "1<=k<=" + std::to_string(kmax) + ", 0<=j<=min(" + std::to_string(jmax) + ",floor(k/2))";
    auto cells = scan_cells(kmax, jmax);
    auto rows = parallel_map(cells, [](const std::pair<int, int>& c) { return row(c.first, c.second); }, workers);
    for (const auto& r : rows) {
        if (pred(r.B))
            continue;
        std::string params = "k=" + std::to_string(r.k) + " j=" + std::to_string(r.j);
        if (r.j <= proven_j)
            rep.fail(params, series_values(r.B));
        else
            rep.find(params, series_values(r.B));
    }
    rep.elapsed_ms = sw.ms();
    return rep;
}

} // namespace detail

// B_{k,j,r} >= 0 over the range; established for j <= 2.
inline VerificationReport check_conjecture_A(int kmax, int jmax, int workers = 1)
{
    return detail::scan_rows("conjecture-A", kmax, jmax, 2, workers,
                             [](const BinomialSeries& b) { return b.nonnegative(); });
}

// (B_{k,j,r})_r log-concave without internal zeros; established for j <= 1.
inline VerificationReport check_conjecture_B(int kmax, int jmax, int workers = 1)
{
    return detail::scan_rows("conjecture-B", kmax, jmax, 1, workers,
                             [](const BinomialSeries& b) { return b.log_concave(); });
}

// Delta A_{k,2}(x) = (x-k+2) A_{k-1,1} + C(x-k+3,2) A_{k-2,0} + (x+1) A_{k-1,2}
//                  + (x+1)(x-k+3) A_{k-2,1} + (x+1) C(x-k+4,2) A_{k-3,0}
inline VerificationReport verify_a12_identity(int k)
{
    Stopwatch sw;
    VerificationReport rep;
    rep.target = "a12-identity";
    rep.range = "k=" + std::to_string(k);
    if (k < 3) {
        rep.precondition(rep.range, "identity needs k >= 3");
        return rep;
    }
    const UPoly x1 = UPoly::linear_root(-1);
    UPoly lhs = a_poly(k, 2).forward_difference();
    UPoly rhs = UPoly::linear_root(k - 2) * a_poly(k - 1, 1) + UPoly::binomial_poly(2, 3 - k) * a_poly(k - 2, 0) +
                x1 * a_poly(k - 1, 2) + x1 * UPoly::linear_root(k - 3) * a_poly(k - 2, 1) +
                x1 * UPoly::binomial_poly(2, 4 - k) * a_poly(k - 3, 0);
    if (lhs != rhs)
        rep.fail(rep.range, "lhs=" + lhs.str() + " rhs=" + rhs.str());
    rep.elapsed_ms = sw.ms();
    return rep;
}

// Random binomially positive, binomially log-concave series; their value
// sequences f(0), f(1), ... must be log-concave once initial zeros are dropped.
inline VerificationReport value_lc_property(int trials, std::uint64_t seed = 20260101)
{
    Stopwatch sw;
    VerificationReport rep;
    rep.target = "value-log-concavity";
    rep.range = std::to_string(trials) + " random series, seed " + std::to_string(seed);
    std::mt19937_64 rng(seed);
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    for (int t = 0; t < trials; ++t) {
        const int start = uniform(0, 4);
        const int len = uniform(1, 8);
        // nonincreasing ratios q_0 >= q_1 >= ... make the coefficients log-concave
        std::vector<Rational> ratios;
        for (int i = 0; i + 1 < len; ++i)
            ratios.push_back(make_rational(uniform(1, 60), uniform(1, 12)));
        std::sort(ratios.begin(), ratios.end(), std::greater<>());
        std::vector<Rational> b(static_cast<std::size_t>(start), Rational(0));
        b.push_back(Rational(uniform(1, 40)));
        for (const auto& q : ratios)
            b.push_back(b.back() * q);
        BinomialSeries f(b);
        if (!f.nonnegative() || !f.log_concave()) {
            rep.fail("trial " + std::to_string(t), "generator produced " + f.str());
            continue;
        }
        std::vector<Rational> values;
        for (int d = 0; d <= static_cast<int>(b.size()) + 6; ++d)
            values.push_back(f(Rational(d)));
        if (!is_log_concave(strip_initial_zeroes(values)))
            rep.fail("trial " + std::to_string(t), f.str());
    }
    rep.elapsed_ms = sw.ms();
    return rep;
}

// D(p,K) D(q,K) >= D(p-1,K) D(q+1,K) for all p <= q, for each K <= Kmax.
inline VerificationReport d_strong_lc_check(int Kmax)
{
    Stopwatch sw;
    VerificationReport rep;
    rep.target = "derangement-strong-log-concavity";
    rep.range = "0<=K<=" + std::to_string(Kmax);
    for (int K = 0; K <= Kmax; ++K) {
        std::vector<Integer> full;
        for (int N = 0; N <= 2 * K + 1; ++N)
            full.push_back(defect_derangements(N, K));
        auto support = nonzero_support(std::span<const Integer>(full));
        if (!support)
            continue;
        std::vector<Integer> seq{Integer(0)};
        for (std::size_t N = support->first; N <= support->second; ++N)
            seq.push_back(full[N]);
        seq.emplace_back(0);
        if (!is_strongly_log_concave(seq)) {
            std::string vals;
            for (const auto& v : seq)
                vals += (vals.empty() ? "" : ",") + to_string(v);
            rep.fail("K=" + std::to_string(K), "(" + vals + ")");
        }
    }
    rep.elapsed_ms = sw.ms();
    return rep;
}

} // namespace symchern
