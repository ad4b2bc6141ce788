#pragma once

// Symmetric polynomials in x1..xn, stored as coordinates in one of the
// monomial, elementary, Schur, or power-sum bases. Conversion goes through
// the monomial basis: realize in x1..xn, collect, and solve against the
// target basis realized in the same variables.

#include "symchern/combinatorics.hpp"
#include "symchern/linalg.hpp"
#include "symchern/mpoly.hpp"
#include "symchern/upoly.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace symchern {

enum class Basis { m, e, s, p };

inline char basis_letter(Basis b)
{
    switch (b) {
    case Basis::m: return 'm';
    case Basis::e: return 'e';
    case Basis::s: return 's';
    case Basis::p: return 'p';
    }
    return '?';
}

inline Basis parse_basis(const std::string& s)
{
    if (s == "m")
        return Basis::m;
    if (s == "e")
        return Basis::e;
    if (s == "s")
        return Basis::s;
    if (s == "p")
        return Basis::p;
    throw std::invalid_argument("unknown basis '" + s + "'");
}

namespace detail {

inline bool coeff_is_zero(const Rational& c) { return c == 0; }
inline bool coeff_is_zero(const MPoly& c) { return c.is_zero(); }
inline std::string coeff_str(const Rational& c) { return to_string(c); }
inline std::string coeff_str(const MPoly& c) { return c.str(); }

} // namespace detail

template <class Coeff>
struct BasicSymFunc {
    Basis basis = Basis::m;
    int n = 1;
    std::map<Partition, Coeff> coords;

    BasicSymFunc() = default;
    BasicSymFunc(Basis b, int vars) : basis(b), n(vars) {}

    Coeff coefficient(const Partition& l) const
    {
        auto it = coords.find(l);
        return it == coords.end() ? Coeff() : it->second;
    }

    void add(const Partition& l, const Coeff& c)
    {
        if (detail::coeff_is_zero(c))
            return;
        auto [it, inserted] = coords.try_emplace(l, c);
        if (!inserted) {
            it->second += c;
            if (detail::coeff_is_zero(it->second))
                coords.erase(it);
        }
    }

    bool is_zero() const { return coords.empty(); }

    // Rendering like "2*e[1,1] + 4*e[2]"; the empty partition renders as the
    // bare coefficient.
    std::string str() const
    {
        if (coords.empty())
            return "0";
        std::string out;
        const char b = basis_letter(basis);
        for (const auto& [l, c] : coords) {
            std::string cs = detail::coeff_str(c);
            bool compound = cs.find_first_of("+-", 1) != std::string::npos;
            bool negative = !compound && cs[0] == '-';
            if (negative)
                cs.erase(0, 1);
            if (compound)
                cs = "(" + cs + ")";
            if (out.empty())
                out += negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            if (l.empty())
                out += cs;
            else if (cs == "1")
                out += std::string(1, b) + l.str();
            else
                out += cs + "*" + b + l.str();
        }
        return out;
    }

    friend bool operator==(const BasicSymFunc& a, const BasicSymFunc& b)
    {
        return a.basis == b.basis && a.n == b.n && a.coords == b.coords;
    }
};

using SymFunc = BasicSymFunc<Rational>;
using TSymFunc = BasicSymFunc<MPoly>;

inline std::vector<std::string> x_vars(int n)
{
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i)
        v.push_back("x" + std::to_string(i));
    return v;
}

// Partitions of k that index a basis of the degree-k part of the ring of
// symmetric polynomials in n variables: length <= n for m and s, largest
// part <= n for e and p.
inline std::vector<Partition> basis_index(Basis b, int k, int n)
{
    if (b == Basis::m || b == Basis::s)
        return partitions_of(k, n);
    return partitions_of(k, -1, n);
}

namespace detail {

inline MPoly monomial_symmetric(const Partition& l, int n)
{
    auto vars = x_vars(n);
    MPoly out(vars);
    if (l.length() > n)
        return out;
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < l.length(); ++i)
        e[static_cast<std::size_t>(i)] = l[static_cast<std::size_t>(i)];
    std::sort(e.begin(), e.end());
    do {
        out += MPoly::monomial(vars, e);
    } while (std::next_permutation(e.begin(), e.end()));
    return out;
}

inline MPoly elementary(int r, int n) { return monomial_symmetric(Partition(std::vector<int>(r, 1)), n); }

inline MPoly power_sum(int r, int n) { return monomial_symmetric(Partition{r}, n); }

// a_{lambda+delta} / a_delta, dividing out one factor (x_i - x_j) at a time.
inline MPoly schur_bialternant(const Partition& l, int n)
{
    if (l.length() > n)
        throw std::invalid_argument("Schur polynomial " + l.str() + " needs at least " +
                                    std::to_string(l.length()) + " variables");
    auto vars = x_vars(n);
    std::vector<int> shifted(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        shifted[static_cast<std::size_t>(j)] = l[static_cast<std::size_t>(j)] + n - 1 - j;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    MPoly alt(vars);
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)])
                    ++inversions;
        Exponent e(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            e[static_cast<std::size_t>(i)] = shifted[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
        alt += MPoly::monomial(vars, e, inversions % 2 ? -1 : 1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            alt = divide_exact(alt, MPoly::variable(vars, vars[static_cast<std::size_t>(i)]) -
                                        MPoly::variable(vars, vars[static_cast<std::size_t>(j)]));
    return alt;
}

inline MPoly realize_uncached(Basis b, const Partition& l, int n)
{
    auto vars = x_vars(n);
    switch (b) {
    case Basis::m:
        return monomial_symmetric(l, n);
    case Basis::s:
        return schur_bialternant(l, n);
    case Basis::e:
    case Basis::p: {
        MPoly out = MPoly::constant(vars, 1);
        for (int part : l.parts())
            out *= b == Basis::e ? elementary(part, n) : power_sum(part, n);
        return out;
    }
    }
    return MPoly(vars);
}

class SymCache {
public:
    static SymCache& instance()
    {
        static SymCache c;
        return c;
    }

    MPoly realization(Basis b, const Partition& l, int n)
    {
        auto key = std::make_tuple(b, l, n);
        {
            std::lock_guard lock(mu_);
            auto it = realized_.find(key);
            if (it != realized_.end())
                return it->second;
        }
        MPoly p = realize_uncached(b, l, n);
        std::lock_guard lock(mu_);
        return realized_.try_emplace(key, std::move(p)).first->second;
    }

    // Inverse of the matrix whose rows are the admissible basis elements of
    // degree k in m-coordinates (columns indexed by basis_index(m, k, n)).
    RationalMatrix from_monomial(Basis b, int k, int n);

private:
    std::mutex mu_;
    std::map<std::tuple<Basis, Partition, int>, MPoly> realized_;
    std::map<std::tuple<Basis, int, int>, RationalMatrix> inverse_;
};

} // namespace detail

// The symmetric polynomial in x1..xn represented by sf.
template <class Coeff>
MPoly expand_to_monomials(const BasicSymFunc<Coeff>& sf)
{
    static_assert(std::is_same_v<Coeff, Rational>, "expansion needs rational coordinates");
    if (sf.n < 1)
        throw std::invalid_argument("expand_to_monomials: n must be positive");
    MPoly out(x_vars(sf.n));
    for (const auto& [l, c] : sf.coords)
        out += detail::SymCache::instance().realization(sf.basis, l, sf.n) * c;
    return out;
}

inline MPoly basis_element(Basis b, const Partition& l, int n)
{
    return detail::SymCache::instance().realization(b, l, n);
}

// Monomial-basis coordinates of a symmetric polynomial in x1..xn.
inline SymFunc collect_symmetric(const MPoly& p_in, int n)
{
    auto vars = x_vars(n);
    MPoly p = p_in.with_vars(vars);
    SymFunc out(Basis::m, n);
    for (const auto& [e, c] : p.terms()) {
        Exponent sorted = e;
        std::sort(sorted.begin(), sorted.end(), std::greater<>());
        if (p.coefficient_of(sorted) != c)
            throw std::invalid_argument("collect_symmetric: polynomial is not symmetric");
        if (sorted == e)
            out.add(Partition(std::vector<int>(e.begin(), e.end())), c);
    }
    // Orbit sizes must also match: every permutation of a present exponent is present.
    for (const auto& [l, c] : out.coords) {
        MPoly orbit = detail::monomial_symmetric(l, n);
        for (const auto& [e, one] : orbit.terms())
            if (p.coefficient_of(e) != c)
                throw std::invalid_argument("collect_symmetric: polynomial is not symmetric");
    }
    return out;
}

inline RationalMatrix detail::SymCache::from_monomial(Basis b, int k, int n)
{
    auto key = std::make_tuple(b, k, n);
    {
        std::lock_guard lock(mu_);
        auto it = inverse_.find(key);
        if (it != inverse_.end())
            return it->second;
    }
    auto rows = basis_index(b, k, n);
    auto cols = basis_index(Basis::m, k, n);
    if (rows.size() != cols.size())
        throw std::domain_error("basis transition is not square");
    RationalMatrix a(rows.size(), std::vector<Rational>(cols.size(), Rational(0)));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        SymFunc m = collect_symmetric(realization(b, rows[i], n), n);
        for (std::size_t j = 0; j < cols.size(); ++j)
            a[i][j] = m.coefficient(cols[j]);
    }
    RationalMatrix inv = inverse(a);
    std::lock_guard lock(mu_);
    return inverse_.try_emplace(key, std::move(inv)).first->second;
}

// Re-expresses sf in the target basis. Each homogeneous degree is handled
// separately; coordinates may be rationals or polynomials (e.g. in T).
template <class Coeff>
BasicSymFunc<Coeff> convert_basis(const BasicSymFunc<Coeff>& sf, Basis target)
{
    if (sf.basis == target)
        return sf;
    const int n = sf.n;
    // Group source coordinates into m-coordinates by degree.
    std::map<int, std::map<Partition, Coeff>> by_degree;
    for (const auto& [l, c] : sf.coords) {
        SymFunc m = collect_symmetric(basis_element(sf.basis, l, n), n);
        auto& slot = by_degree[l.size()];
        for (const auto& [mu, q] : m.coords) {
            auto [it, inserted] = slot.try_emplace(mu, c * q);
            if (!inserted)
                it->second += c * q;
        }
    }
    BasicSymFunc<Coeff> out(target, n);
    for (const auto& [k, mcoords] : by_degree) {
        if (target == Basis::m) {
            for (const auto& [mu, c] : mcoords)
                out.add(mu, c);
            continue;
        }
        auto rows = basis_index(target, k, n);
        auto cols = basis_index(Basis::m, k, n);
        RationalMatrix inv = detail::SymCache::instance().from_monomial(target, k, n);
        // coordinates y satisfy y * A = x, so y = x * A^{-1}
        for (std::size_t i = 0; i < rows.size(); ++i) {
            Coeff acc{};
            for (std::size_t j = 0; j < cols.size(); ++j) {
                auto it = mcoords.find(cols[j]);
                if (it == mcoords.end() || inv[j][i] == 0)
                    continue;
                acc += it->second * inv[j][i];
            }
            out.add(rows[i], acc);
        }
    }
    return out;
}

// A_j = [u^j] (1 - u) C(u) for 0 <= j <= floor(k/2): coordinates of a rank-two
// symmetric polynomial of degree k in the Schur basis s_(k-j,j)(u,1).
inline std::vector<Rational> schur_rank2_extract(const UPoly& c, int k)
{
    UPoly shifted = UPoly({Rational(1), Rational(-1)}) * c;
    std::vector<Rational> a;
    for (int j = 0; j <= k / 2; ++j)
        a.push_back(shifted[static_cast<std::size_t>(j)]);
    return a;
}

// sum_j A_j s_(k-j,j)(u,1) with s_(k-j,j)(u,1) = u^j + ... + u^{k-j}.
inline UPoly schur_rank2_reconstruct(const std::vector<Rational>& a, int k)
{
    UPoly out;
    for (std::size_t j = 0; j < a.size(); ++j)
        for (int t = static_cast<int>(j); t <= k - static_cast<int>(j); ++t)
            out += UPoly::monomial(static_cast<std::size_t>(t), a[j]);
    return out;
}

} // namespace symchern
