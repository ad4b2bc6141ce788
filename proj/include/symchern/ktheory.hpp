#pragma once

// The normalized K-theoretic product
//   NN_{n,d}(z, zeta, u) = prod_alpha (1 + z (1 - prod_j (1 - zeta u_j)^{alpha_j}))
// expanded exactly up to given z- and zeta-orders, and its coefficients as
// universal polynomials in T_r(n,d).

#include "symchern/chern.hpp"
#include "symchern/combinatorics.hpp"
#include "symchern/mpoly.hpp"
#include "symchern/symfunc.hpp"
#include "symchern/upoly.hpp"

#include <functional>
#include <string>
#include <vector>

namespace symchern {

inline std::vector<std::string> u_vars(int n)
{
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i)
        v.push_back("u" + std::to_string(i));
    return v;
}

struct NNExpansion {
    int n = 0, d = 0;
    int zmax = 0, zetamax = 0;
    MPoly value;  // in z, zeta, u1..un

    // Every monomial has z-degree at most its zeta-degree.
    bool vanishing_law_holds() const
    {
        const std::size_t iz = value.index_of("z"), izeta = value.index_of("zeta");
        for (const auto& [e, c] : value.terms())
            if (e[iz] > e[izeta])
                return false;
        return true;
    }

    MPoly coefficient(int q, int m) const { return value.coefficient({{"z", q}, {"zeta", m}}); }
};

inline NNExpansion nn_truncated(int n, int d, int zmax, int zetamax, long budget = default_oracle_budget)
{
    check_budget(n, d, budget);
    std::vector<std::string> vars{"z", "zeta"};
    for (const auto& v : u_vars(n))
        vars.push_back(v);
    const std::vector<DegreeCap> zeta_cap{{{"zeta"}, zetamax}};
    const std::vector<DegreeCap> caps{{{"z"}, zmax}, {{"zeta"}, zetamax}};
    const MPoly one = MPoly::constant(vars, 1);
    const MPoly z = MPoly::variable(vars, "z");
    const MPoly zeta = MPoly::variable(vars, "zeta");
    std::vector<MPoly> base;  // 1 - zeta u_j
    for (int j = 1; j <= n; ++j)
        base.push_back(one - zeta * MPoly::variable(vars, "u" + std::to_string(j)));

    MPoly total = one;
    for (const auto& alpha : weak_compositions(n, d)) {
        MPoly prod = one;
        for (int j = 0; j < n; ++j)
            for (int t = 0; t < alpha.entries[static_cast<std::size_t>(j)]; ++t)
                prod = multiply_truncated(prod, base[static_cast<std::size_t>(j)], zeta_cap);
        MPoly factor = one + z * (one - prod);
        total = multiply_truncated(total, factor, caps);
    }
    return {n, d, zmax, zetamax, total};
}

// [z^q zeta^m] NN_{n,d} in the e-basis of u1..un.
inline SymFunc nn_coefficient(int n, int d, int q, int m, long budget = default_oracle_budget)
{
    NNExpansion nn = nn_truncated(n, d, q, m, budget);
    MPoly c = nn.coefficient(q, m);
    std::map<std::string, std::string> rename;
    for (int i = 1; i <= n; ++i)
        rename["u" + std::to_string(i)] = "x" + std::to_string(i);
    return convert_basis(collect_symmetric(c.with_vars(u_vars(n)).rename(rename), n), Basis::e);
}

namespace detail {

// c_t with prod_k C(a, b_k) = sum_t c_t a^{(t)} (falling factorials).
inline std::vector<Rational> falling_factorial_coeffs(const std::vector<int>& bs)
{
    UPoly p = UPoly::constant(1);
    for (int b : bs)
        p *= UPoly::binomial_poly(b);
    std::vector<Rational> c(static_cast<std::size_t>(std::max<long>(p.degree(), 0) + 1), Rational(0));
    for (long q = 0; q <= p.degree(); ++q)
        for (long t = 0; t <= q; ++t)
            c[static_cast<std::size_t>(t)] += p[static_cast<std::size_t>(q)] * Rational(stirling2(static_cast<int>(q), static_cast<int>(t)));
    return c;
}

// Coefficient of zeta^{|mu|} m_mu(u) in P_s^NN = sum_alpha A_alpha^s, as a
// polynomial in T. Enumerates s-tuples of nonzero beta in Z^{l(mu)} summing
// to mu; variables outside the support of mu cannot carry any beta.
inline MPoly nn_power_sum_coefficient(int s, const Partition& mu)
{
    const int m = mu.size();
    const auto len = static_cast<std::size_t>(mu.length());
    auto vars = t_vars(std::max(m, 1));
    MPoly out(vars);
    std::vector<std::vector<int>> betas(static_cast<std::size_t>(s), std::vector<int>(len, 0));
    std::vector<int> remaining(mu.parts());

    // Accumulates one complete tuple.
    auto emit = [&] {
        // per variable i: falling-factorial expansion of prod_t C(a, beta_t[i])
        std::vector<std::vector<Rational>> ff(len);
        for (std::size_t i = 0; i < len; ++i) {
            std::vector<int> bs;
            for (const auto& b : betas)
                if (b[i])
                    bs.push_back(b[i]);
            ff[i] = falling_factorial_coeffs(bs);
        }
        // sum over (t_1..t_l), t_i >= 1, of prod c_{t_i} t_i! T_{sum t}
        std::vector<std::size_t> t(len, 1);
        while (true) {
            Rational c = (m + s) % 2 ? -1 : 1;
            int total = 0;
            for (std::size_t i = 0; i < len; ++i) {
                c *= ff[i][t[i]] * Rational(factorial(t[i]));
                total += static_cast<int>(t[i]);
            }
            if (c != 0)
                out += MPoly::variable(vars, t_var(total)) * c;
            std::size_t i = 0;
            while (i < len && t[i] + 1 >= ff[i].size())
                t[i++] = 1;
            if (i == len)
                break;
            ++t[i];
        }
    };

    // Distributes `remaining` over betas[slot..s-1], each beta nonzero.
    std::function<void(int)> fill = [&](int slot) {
        if (slot == s) {
            for (int r : remaining)
                if (r)
                    return;
            emit();
            return;
        }
        // enumerate beta with 0 <= beta_i <= remaining_i, beta != 0
        std::vector<int>& b = betas[static_cast<std::size_t>(slot)];
        std::function<void(std::size_t, bool)> choose = [&](std::size_t i, bool nonzero) {
            if (i == len) {
                if (!nonzero)
                    return;
                for (std::size_t k = 0; k < len; ++k)
                    remaining[k] -= b[k];
                fill(slot + 1);
                for (std::size_t k = 0; k < len; ++k)
                    remaining[k] += b[k];
                return;
            }
            for (int v = 0; v <= remaining[i]; ++v) {
                b[i] = v;
                choose(i + 1, nonzero || v > 0);
            }
            b[i] = 0;
        };
        choose(0, false);
    };
    if (len > 0)
        fill(0);
    return out;
}

// P_s^NN truncated at zeta-degree m, in the e-basis with T coefficients.
// The zeta-degree of each term equals its u-degree, i.e. |lambda|.
inline TSymFunc nn_power_sum(int s, int m)
{
    TSymFunc out(Basis::e, std::max(m, 1));
    for (int deg = s; deg <= m; ++deg) {
        TSymFunc mono(Basis::m, deg);
        for (const auto& mu : partitions_of(deg))
            mono.add(mu, nn_power_sum_coefficient(s, mu));
        for (const auto& [l, c] : convert_basis(mono, Basis::e).coords)
            out.add(l, c);
    }
    return out;
}

template <class Coeff>
BasicSymFunc<Coeff> truncate_degree(const BasicSymFunc<Coeff>& f, int m)
{
    BasicSymFunc<Coeff> out(f.basis, f.n);
    for (const auto& [l, c] : f.coords)
        if (l.size() <= m)
            out.add(l, c);
    return out;
}

} // namespace detail

// F_{q,m,lambda} in Q[T1..Tm]: [z^q zeta^m] NN built from the power sums of
// the A_alpha by Newton's identities, keeping zeta-degree <= m throughout.
inline TSymFunc nn_symbolic_T(int q, int m)
{
    if (q < 0 || m < 0)
        throw std::invalid_argument("nn_symbolic_T: negative order");
    std::vector<TSymFunc> p(static_cast<std::size_t>(q + 1));
    for (int s = 1; s <= q; ++s)
        p[static_cast<std::size_t>(s)] = detail::nn_power_sum(s, m);
    std::vector<TSymFunc> e(static_cast<std::size_t>(q + 1));
    e[0] = TSymFunc(Basis::e, std::max(m, 1));
    e[0].add(Partition(), MPoly::constant(1));
    for (int k = 1; k <= q; ++k) {
        TSymFunc acc(Basis::e, std::max(m, 1));
        for (int j = 1; j <= k; ++j) {
            TSymFunc term = detail::truncate_degree(
                detail::e_product(e[static_cast<std::size_t>(k - j)], p[static_cast<std::size_t>(j)]), m);
            const Rational sign = (j % 2) ? 1 : -1;
            for (const auto& [l, c] : term.coords)
                acc.add(l, c * sign);
        }
        TSymFunc ek(Basis::e, std::max(m, 1));
        for (const auto& [l, c] : acc.coords)
            ek.add(l, c * (Rational(1) / Rational(k)));
        e[static_cast<std::size_t>(k)] = ek;
    }
    TSymFunc out(Basis::e, std::max(m, 1));
    for (const auto& [l, c] : e[static_cast<std::size_t>(q)].coords)
        if (l.size() == m)
            out.add(l, c.with_vars(t_vars(std::max(m, 1))).compact());
    return out;
}

} // namespace symchern
