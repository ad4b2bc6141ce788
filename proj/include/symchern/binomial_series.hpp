#pragma once

// Polynomials expanded in the binomial basis C(x, r).

#include "symchern/exact.hpp"
#include "symchern/sequences.hpp"
#include "symchern/upoly.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace symchern {

// f(x) = sum_r b_r C(x, r). Trailing zeros are trimmed.
class BinomialSeries {
public:
    BinomialSeries() = default;
    explicit BinomialSeries(std::vector<Rational> b) : b_(std::move(b)) { trim(); }
    BinomialSeries(std::initializer_list<Rational> b) : b_(b) { trim(); }

    const std::vector<Rational>& coeffs() const { return b_; }
    std::size_t size() const { return b_.size(); }
    bool empty() const { return b_.empty(); }
    Rational operator[](std::size_t r) const { return r < b_.size() ? b_[r] : Rational(0); }

    // First index with a nonzero coefficient.
    std::optional<std::size_t> min_support() const
    {
        for (std::size_t r = 0; r < b_.size(); ++r)
            if (b_[r] != 0)
                return r;
        return std::nullopt;
    }

    Rational operator()(const Rational& x) const
    {
        Rational acc = 0, term = 1;  // term = C(x, r)
        for (std::size_t r = 0; r < b_.size(); ++r) {
            acc += b_[r] * term;
            term = term * (x - static_cast<long>(r)) / static_cast<long>(r + 1);
        }
        return acc;
    }

    bool nonnegative() const { return is_nonnegative(b_); }
    bool log_concave() const { return is_log_concave(b_); }

    friend bool operator==(const BinomialSeries&, const BinomialSeries&) = default;

    std::string str() const
    {
        std::string s = "(";
        for (std::size_t i = 0; i < b_.size(); ++i) {
            if (i)
                s += ",";
            s += to_string(b_[i]);
        }
        return s + ")";
    }

private:
    void trim()
    {
        while (!b_.empty() && b_.back() == 0)
            b_.pop_back();
    }

    std::vector<Rational> b_;
};

// b_r = Delta^r p(0), read off the forward-difference table of p(0..D).
inline BinomialSeries to_binomial_basis(const UPoly& p)
{
    if (p.is_zero())
        return {};
    const auto D = static_cast<std::size_t>(p.degree());
    std::vector<Rational> row(D + 1);
    for (std::size_t i = 0; i <= D; ++i)
        row[i] = p(Rational(static_cast<long>(i)));
    std::vector<Rational> b;
    b.reserve(D + 1);
    for (std::size_t r = 0; r <= D; ++r) {
        b.push_back(row[0]);
        for (std::size_t i = 0; i + 1 < row.size(); ++i)
            row[i] = row[i + 1] - row[i];
        row.pop_back();
    }
    return BinomialSeries(std::move(b));
}

inline UPoly from_binomial_basis(const BinomialSeries& b)
{
    UPoly p, basis = UPoly::constant(1);
    for (std::size_t r = 0; r < b.size(); ++r) {
        if (b[r] != 0)
            p += basis * b[r];
        basis = basis * UPoly::linear_root(static_cast<long>(r)) *
                (Rational(1) / Rational(static_cast<long>(r + 1)));
    }
    return p;
}

// (T_alpha f)_r = (r - alpha) f_r + r f_{r-1}: multiplication by (x - alpha).
inline BinomialSeries t_alpha(const BinomialSeries& f, const Integer& alpha)
{
    std::vector<Rational> out(f.size() + 1, Rational(0));
    for (std::size_t r = 0; r < out.size(); ++r) {
        Rational rr(static_cast<long>(r));
        out[r] = (rr - Rational(alpha)) * f[r];
        if (r > 0)
            out[r] += rr * f[r - 1];
    }
    return BinomialSeries(std::move(out));
}

struct ShiftCertificate {
    BinomialSeries series;             // (x - c) A(x) in the binomial basis
    bool precondition_ok = false;      // A nonnegative with min support I >= c
    bool nonnegative = false;          // every output coefficient >= 0
    std::optional<std::size_t> input_min_support;
    std::optional<std::size_t> output_min_support;
    std::string message;
};

// Multiplication by (x - c) of a nonnegative binomial series with minimum
// support I >= c. The output is nonnegative with minimum support at least
// max(I, c + 1). A zero input yields a zero output and is accepted.
inline ShiftCertificate binomial_shift(const BinomialSeries& a, const Integer& c)
{
    ShiftCertificate cert;
    cert.series = t_alpha(a, c);
    cert.input_min_support = a.min_support();
    cert.output_min_support = cert.series.min_support();
    cert.nonnegative = cert.series.nonnegative();
    if (!a.nonnegative()) {
        cert.message = "input has a negative coefficient";
        return cert;
    }
    if (!cert.input_min_support) {
        cert.precondition_ok = true;
        cert.message = "zero input";
        return cert;
    }
    const Integer I(static_cast<unsigned long>(*cert.input_min_support));
    if (I < c) {
        cert.message = "minimum support " + to_string(I) + " is below c = " + to_string(c);
        return cert;
    }
    cert.precondition_ok = true;
    const Integer bound = I > c + 1 ? I : Integer(c + 1);
    if (!cert.nonnegative)
        cert.message = "negative output coefficient";
    else if (Integer(static_cast<unsigned long>(*cert.output_min_support)) < bound)
        cert.message = "output support starts below max(I, c+1)";
    return cert;
}

} // namespace symchern
