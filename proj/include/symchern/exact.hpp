#pragma once

// Exact integers and rationals. Everything in the library is computed over
// these two types; there is no floating point anywhere.

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace symchern {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Integer to_integer(const Rational& q)
{
    if (!is_integer(q))
        throw std::domain_error("rational " + q.get_str() + " is not an integer");
    return q.get_num();
}

// Decimal rendering; rationals as "p/q" with the denominator omitted when 1.
inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational parse_rational(std::string_view text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s.push_back(c);
    if (s.empty())
        throw std::invalid_argument("empty rational literal");
    auto valid_int = [](std::string_view t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i == t.size())
            return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i])))
                return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den))
        throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
    if (num[0] == '+')
        num.erase(0, 1);
    if (den[0] == '+')
        den.erase(0, 1);
    return make_rational(Integer(num), Integer(den));
}

inline Integer factorial(unsigned long n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// Generalized binomial n(n-1)...(n-k+1)/k! for any integer n and k >= 0.
inline Integer binomial(const Integer& n, long k)
{
    if (k < 0)
        throw std::invalid_argument("binomial: negative lower index");
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

inline Integer binomial(long n, long k) { return binomial(Integer(n), k); }

inline Integer falling_factorial(const Integer& x, unsigned long k)
{
    Integer r = 1;
    for (unsigned long i = 0; i < k; ++i)
        r *= x - i;
    return r;
}

inline Integer pow(const Integer& base, unsigned long e)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational pow(const Rational& base, unsigned long e)
{
    Rational r(pow(Integer(base.get_num()), e), pow(Integer(base.get_den()), e));
    r.canonicalize();
    return r;
}

} // namespace symchern
