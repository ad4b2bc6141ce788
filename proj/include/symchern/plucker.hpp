#pragma once

// Shifted binomial expansions of Pluecker coefficient polynomials. For a
// partition lambda with all parts >= 2, N = |lambda| and M = |lambda| - l(lambda);
// the coefficient P_{lambda;i}(d) of s_(i,M-i), ceil(M/2) <= i <= M, carries
// the Pluecker index 2i - M. The shift d = N + x gives Q(x), expanded as
// sum_r C_r C(x,r).

#include "symchern/binomial_series.hpp"
#include "symchern/combinatorics.hpp"
#include "symchern/report.hpp"
#include "symchern/sequences.hpp"
#include "symchern/upoly.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace symchern {

struct PluckerDatum {
    std::string label;
    Partition lambda;
    int i = 0;         // Schur index: coefficient of s_(i, M-i)
    int pl_index = 0;  // 2i - M
    int N = 0, M = 0;
    UPoly P;           // in d
    UPoly Q;           // in x, Q(x) = P(N + x)
    BinomialSeries C;  // Q in the binomial basis of x
    std::optional<BinomialSeries> expected;  // reference coefficients, when known
};

inline int codim(const Partition& l) { return l.size() - l.length(); }

inline void check_plucker_partition(const Partition& l)
{
    if (l.empty())
        throw std::invalid_argument("Pluecker data need a nonempty partition");
    for (int p : l.parts())
        if (p < 2)
            throw std::invalid_argument("partition " + l.str() + " has a part smaller than 2");
}

inline int schur_index_from_pl(const Partition& l, int pl)
{
    const int M = codim(l);
    if ((pl + M) % 2 != 0)
        throw std::invalid_argument("Pluecker index " + std::to_string(pl) + " has the wrong parity for " + l.str());
    return (pl + M) / 2;
}

inline PluckerDatum shifted_datum(const Partition& l, int i, const UPoly& p, std::string label = "")
{
    check_plucker_partition(l);
    const int M = codim(l);
    if (2 * i < M || i > M)
        throw std::invalid_argument("index i=" + std::to_string(i) + " is not admissible for " + l.str());
    PluckerDatum out;
    out.label = std::move(label);
    out.lambda = l;
    out.i = i;
    out.pl_index = 2 * i - M;
    out.N = l.size();
    out.M = M;
    out.P = p;
    out.Q = p.shift(Rational(out.N));
    out.C = to_binomial_basis(out.Q);
    return out;
}

// Pl_{lambda;M}(d) = d(d-1)...(d-N+1) / prod_q e_q!, with e_q the multiplicity
// of q in lambda.
inline PluckerDatum top_plucker(const Partition& l)
{
    check_plucker_partition(l);
    const int N = l.size();
    Integer denom = 1;
    auto mult = l.multiplicities();
    for (std::size_t q = 2; q < mult.size(); ++q)
        denom *= factorial(static_cast<unsigned long>(mult[q]));
    UPoly p = UPoly::constant(make_rational(1, denom));
    for (int t = 0; t < N; ++t)
        p *= UPoly::linear_root(t);
    return shifted_datum(l, codim(l), p, "top " + l.str());
}

// C_r = (N! / prod e_q!) C(N, r).
inline BinomialSeries top_plucker_closed(const Partition& l)
{
    const int N = l.size();
    Integer scale = factorial(static_cast<unsigned long>(N));
    auto mult = l.multiplicities();
    for (std::size_t q = 2; q < mult.size(); ++q)
        scale /= factorial(static_cast<unsigned long>(mult[q]));
    std::vector<Rational> c;
    for (int r = 0; r <= N; ++r)
        c.emplace_back(scale * binomial(Integer(N), r));
    return BinomialSeries(std::move(c));
}

namespace detail {

inline BinomialSeries integer_series(std::initializer_list<long> v)
{
    std::vector<Rational> c;
    for (long x : v)
        c.emplace_back(x);
    return BinomialSeries(std::move(c));
}

inline UPoly int_poly(std::initializer_list<long> v)
{
    std::vector<Rational> c;
    for (long x : v)
        c.emplace_back(x);
    return UPoly(std::move(c));
}

} // namespace detail

// The cubic and quartic factors attached to lambda = (3,3), s_(3,1).
inline UPoly plucker_33_cubic() { return detail::int_poly({402, 188, 27, 1}); }
inline UPoly plucker_33_quartic() { return detail::int_poly({134, 319, 304, 130, 20}); }

// The four worked vectors: the top and bitangent coefficients of (2,2), the
// Pluecker index 1 coefficient of (2,2,2), and the s_(3,1) coefficient of (3,3).
inline std::vector<PluckerDatum> builtin_vectors()
{
    using detail::int_poly;
    using detail::integer_series;
    const UPoly d = UPoly::x();
    std::vector<PluckerDatum> out;

    PluckerDatum top = top_plucker(Partition{2, 2});
    top.label = "top (2,2)";
    top.expected = integer_series({12, 48, 72, 48, 12});
    out.push_back(top);

    // (1/2) d (d-2)(d-3)(d+3)
    UPoly bitangent = d * UPoly::linear_root(2) * UPoly::linear_root(3) * UPoly::linear_root(-3) * Rational(1, 2);
    PluckerDatum bt = shifted_datum(Partition{2, 2}, schur_index_from_pl(Partition{2, 2}, 0), bitangent, "bitangent (2,2)");
    bt.expected = integer_series({28, 92, 112, 60, 12});
    out.push_back(bt);

    // (1/3) d (d-5)(d-4)(d-3)(d^2+3d-2)
    UPoly p222 = d * UPoly::linear_root(5) * UPoly::linear_root(4) * UPoly::linear_root(3) * int_poly({-2, 3, 1}) *
                 Rational(1, 3);
    PluckerDatum v222 = shifted_datum(Partition{2, 2, 2}, schur_index_from_pl(Partition{2, 2, 2}, 1), p222, "(2,2,2) pl=1");
    v222.expected = integer_series({624, 3184, 6768, 7680, 4912, 1680, 240});
    out.push_back(v222);

    // Q(x) = (1/2)(x+1)(x+2)(x+6)(x^3+27x^2+188x+402), unshifted by N = 6
    UPoly q33 = UPoly::linear_root(-1) * UPoly::linear_root(-2) * UPoly::linear_root(-6) * plucker_33_cubic() *
                Rational(1, 2);
    PluckerDatum v33 = shifted_datum(Partition{3, 3}, 3, q33.shift(-6), "(3,3) s_(3,1)");
    v33.expected = integer_series({2412, 10566, 19368, 19026, 10512, 3060, 360});
    out.push_back(v33);
    return out;
}

// Flex count 3d(d-2) for lambda = (3), Pluecker index 0.
inline PluckerDatum flex_datum()
{
    return shifted_datum(Partition{3}, schur_index_from_pl(Partition{3}, 0), detail::int_poly({0, -6, 3}), "flex (3)");
}

// Checks C >= 0, C log-concave, and log-concavity of Q(0), Q(1), ... after
// initial zeros (on a finite window of values).
inline VerificationReport check_shifted_conjectures(const PluckerDatum& datum)
{
    Stopwatch sw;
    VerificationReport rep;
    rep.target = "shifted-plucker";
    const long D = std::max<long>(datum.Q.degree(), 0);
    const long window = std::max(2 * D, D + 8);
    rep.range = datum.label + " lambda=" + datum.lambda.str() + " i=" + std::to_string(datum.i) +
                " values x=0.." + std::to_string(window);
    if (!datum.C.nonnegative())
        rep.fail("binomial positivity", datum.C.str());
    if (!datum.C.log_concave())
        rep.fail("binomial log-concavity", datum.C.str());
    std::vector<Rational> values;
    for (long x = 0; x <= window; ++x)
        values.push_back(datum.Q(Rational(x)));
    if (!is_log_concave(strip_initial_zeroes(values)))
        rep.fail("value log-concavity", datum.Q.str("x"));
    if (datum.expected && !(*datum.expected == datum.C))
        rep.fail("reference coefficients", "derived " + datum.C.str() + ", reference " + datum.expected->str());
    rep.elapsed_ms = sw.ms();
    return rep;
}

struct CsmShift {
    VerificationReport report;
    BinomialSeries gamma;
};

// Shifts a signed CSM-Schur coefficient polynomial by y = d - |lambda| - 2(f-c)
// and checks that its binomial coefficients are nonnegative and log-concave.
inline CsmShift csm_shifted_check(const Partition& l, int f, int c, const UPoly& signed_coeff)
{
    Stopwatch sw;
    CsmShift out;
    auto& rep = out.report;
    rep.target = "csm-shifted";
    rep.range = "lambda=" + l.str() + " f=" + std::to_string(f) + " c=" + std::to_string(c);
    for (int p : l.parts())
        if (p < 2) {
            rep.precondition(rep.range, "partition has a part smaller than 2");
            return out;
        }
    if (c != codim(l)) {
        rep.precondition(rep.range, "c must equal |lambda| - l(lambda) = " + std::to_string(codim(l)));
        return out;
    }
    if (f < c) {
        rep.precondition(rep.range, "need f >= c");
        return out;
    }
    out.gamma = to_binomial_basis(signed_coeff.shift(Rational(l.size() + 2 * (f - c))));
    if (!out.gamma.nonnegative())
        rep.fail("gamma nonnegative", out.gamma.str());
    if (!out.gamma.log_concave())
        rep.fail("gamma log-concave", out.gamma.str());
    rep.elapsed_ms = sw.ms();
    return out;
}

} // namespace symchern
