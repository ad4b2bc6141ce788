#pragma once

#include "symchern/exact.hpp"
#include "symchern/linalg.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace symchern {

// Dense univariate polynomial c_0 + c_1 x + ... over Rational.
// Trailing zeros are never stored, so the zero polynomial has no coefficients.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    UPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    static UPoly constant(const Rational& a) { return UPoly(std::vector<Rational>{a}); }
    static UPoly x() { return UPoly({Rational(0), Rational(1)}); }
    // x - a
    static UPoly linear_root(const Rational& a) { return UPoly({-a, Rational(1)}); }

    static UPoly monomial(std::size_t power, const Rational& a = 1)
    {
        std::vector<Rational> c(power + 1, Rational(0));
        c[power] = a;
        return UPoly(std::move(c));
    }

    // C(x + shift, r) as a polynomial in x.
    static UPoly binomial_poly(long r, const Rational& shift = 0)
    {
        if (r < 0)
            return {};
        UPoly p = constant(1);
        for (long i = 0; i < r; ++i)
            p *= linear_root(Rational(i) - shift);
        return p * (Rational(1) / Rational(factorial(static_cast<unsigned long>(r))));
    }

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Rational operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    Rational operator()(const Rational& x) const
    {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    UPoly& operator+=(const UPoly& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), Rational(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] += o.c_[i];
        trim();
        return *this;
    }
    UPoly& operator-=(const UPoly& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), Rational(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    UPoly& operator*=(const UPoly& o)
    {
        *this = *this * o;
        return *this;
    }

    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator-(UPoly a)
    {
        for (auto& v : a.c_)
            v = -v;
        return a;
    }
    friend UPoly operator*(const UPoly& a, const UPoly& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0)
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        }
        return UPoly(std::move(r));
    }
    friend UPoly operator*(UPoly a, const Rational& s)
    {
        for (auto& v : a.c_)
            v *= s;
        a.trim();
        return a;
    }
    friend UPoly operator*(const Rational& s, UPoly a) { return std::move(a) * s; }
    friend bool operator==(const UPoly&, const UPoly&) = default;

    UPoly pow(unsigned e) const
    {
        UPoly r = constant(1), b = *this;
        while (e) {
            if (e & 1)
                r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    // p(q(x))
    UPoly compose(const UPoly& q) const
    {
        UPoly acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * q + constant(*it);
        return acc;
    }

    // p(x + s)
    UPoly shift(const Rational& s) const { return compose(UPoly({s, Rational(1)})); }

    // p(x+1) - p(x)
    UPoly forward_difference() const { return shift(1) - *this; }

    std::string str(const std::string& var = "x") const;

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }

    std::vector<Rational> c_;
};

inline UPoly derivative(const UPoly& p)
{
    std::vector<Rational> d;
    for (std::size_t i = 1; i < p.coeffs().size(); ++i)
        d.push_back(p.coeffs()[i] * Rational(static_cast<long>(i)));
    return UPoly(std::move(d));
}

// Exact Newton-form interpolation through (x_i, y_i); abscissae must be distinct.
inline UPoly interpolate(std::span<const std::pair<Rational, Rational>> points)
{
    const std::size_t n = points.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (points[i].first == points[j].first)
                throw std::invalid_argument("interpolate: duplicate abscissa " + to_string(points[i].first));
    std::vector<Rational> dd(n);
    for (std::size_t i = 0; i < n; ++i)
        dd[i] = points[i].second;
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);
    UPoly result, basis = UPoly::constant(1);
    for (std::size_t i = 0; i < n; ++i) {
        result += basis * dd[i];
        basis *= UPoly::linear_root(points[i].first);
    }
    return result;
}

inline UPoly interpolate(const std::vector<std::pair<Rational, Rational>>& points)
{
    return interpolate(std::span<const std::pair<Rational, Rational>>(points));
}

inline UPoly from_roots(std::span<const Rational> roots, const Rational& lead = 1)
{
    UPoly p = UPoly::constant(lead);
    for (const auto& r : roots)
        p *= UPoly::linear_root(r);
    return p;
}

// Res(p, q) as the determinant of the Sylvester matrix.
inline Rational resultant(const UPoly& p, const UPoly& q)
{
    if (p.is_zero() || q.is_zero())
        return 0;
    const auto m = static_cast<std::size_t>(p.degree());
    const auto n = static_cast<std::size_t>(q.degree());
    const std::size_t size = m + n;
    if (size == 0)
        return 1;
    RationalMatrix s(size, std::vector<Rational>(size, Rational(0)));
    for (std::size_t row = 0; row < n; ++row)
        for (std::size_t i = 0; i <= m; ++i)
            s[row][row + i] = p[m - i];
    for (std::size_t row = 0; row < m; ++row)
        for (std::size_t i = 0; i <= n; ++i)
            s[n + row][row + i] = q[n - i];
    return determinant(std::move(s));
}

// (-1)^{D(D-1)/2} Res(p, p') / lc(p), so that b^2 - 4ac is the quadratic case.
inline Rational discriminant(const UPoly& p)
{
    if (p.is_zero())
        throw std::invalid_argument("discriminant of the zero polynomial");
    const long D = p.degree();
    if (D < 1)
        throw std::invalid_argument("discriminant requires degree >= 1");
    Rational r = resultant(p, derivative(p)) / p.leading();
    return ((D * (D - 1) / 2) % 2) ? Rational(-r) : r;
}

inline std::string UPoly::str(const std::string& var) const
{
    if (c_.empty())
        return "0";
    std::string out;
    for (long i = degree(); i >= 0; --i) {
        const Rational& a = c_[static_cast<std::size_t>(i)];
        if (a == 0)
            continue;
        Rational mag = abs(a);
        if (out.empty())
            out += a < 0 ? "-" : "";
        else
            out += a < 0 ? " - " : " + ";
        if (i == 0) {
            out += to_string(mag);
            continue;
        }
        if (mag != 1)
            out += to_string(mag) + "*";
        out += var;
        if (i > 1)
            out += "^" + std::to_string(i);
    }
    return out;
}

} // namespace symchern
