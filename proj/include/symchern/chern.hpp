#pragma once

// Chern classes c_k(n,d) of Sym^d(C^n) in terms of the Chern roots x1..xn:
// the truncated product over all weights, the power-sum moments, and the
// universal expressions in T_r(n,d) = C(d+n-1, n+r-1).

#include "symchern/combinatorics.hpp"
#include "symchern/mpoly.hpp"
#include "symchern/report.hpp"
#include "symchern/symfunc.hpp"
#include "symchern/upoly.hpp"

#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace symchern {

inline Integer t_value(int n, int d, int r) { return binomial(Integer(d + n - 1), n + r - 1); }

struct TValues {
    int n = 0, d = 0;
    std::vector<Integer> T;  // T[r] for r = 0..k

    Integer operator[](int r) const { return r < static_cast<int>(T.size()) ? T[static_cast<std::size_t>(r)] : Integer(0); }
};

inline TValues t_values(int n, int d, int k)
{
    TValues t{n, d, {}};
    for (int r = 0; r <= k; ++r)
        t.T.push_back(t_value(n, d, r));
    return t;
}

inline std::string t_var(int r) { return "T" + std::to_string(r); }

inline std::vector<std::string> t_vars(int k)
{
    std::vector<std::string> v;
    for (int r = 1; r <= k; ++r)
        v.push_back(t_var(r));
    return v;
}

inline std::map<std::string, Rational> t_point(int n, int d, int k)
{
    std::map<std::string, Rational> pt;
    for (int r = 1; r <= k; ++r)
        pt[t_var(r)] = Rational(t_value(n, d, r));
    return pt;
}

struct ChernClass {
    int n = 0, d = 0, k = 0;
    SymFunc value;
};

inline constexpr long default_oracle_budget = 10000;

inline Integer weight_count(int n, int d) { return binomial(Integer(d + n - 1), n - 1); }

inline void check_budget(int n, int d, long budget)
{
    if (n < 1 || d < 0)
        throw std::invalid_argument("need n >= 1 and d >= 0");
    Integer count = weight_count(n, d);
    if (count > budget)
        throw BudgetExceeded("product over " + to_string(count) + " weights exceeds the budget of " +
                             std::to_string(budget));
}

// c_0..c_kmax by multiplying out prod_alpha (1 + alpha.x), discarding terms
// of degree above kmax after every factor. Values are in the m-basis.
inline std::vector<ChernClass> chern_oracle(int n, int d, int kmax, long budget = default_oracle_budget)
{
    check_budget(n, d, budget);
    auto vars = x_vars(n);
    const std::vector<DegreeCap> cap{{vars, kmax}};
    MPoly total = MPoly::constant(vars, 1);
    for (const auto& alpha : weak_compositions(n, d)) {
        MPoly factor = MPoly::constant(vars, 1);
        for (int i = 0; i < n; ++i)
            if (alpha.entries[static_cast<std::size_t>(i)])
                factor += MPoly::variable(vars, vars[static_cast<std::size_t>(i)]) *
                          Rational(alpha.entries[static_cast<std::size_t>(i)]);
        total = multiply_truncated(total, factor, cap);
    }
    std::vector<MPoly> parts(static_cast<std::size_t>(kmax + 1), MPoly(vars));
    for (const auto& [e, c] : total.terms()) {
        int deg = 0;
        for (int v : e)
            deg += v;
        parts[static_cast<std::size_t>(deg)] += MPoly::monomial(vars, e, c);
    }
    std::vector<ChernClass> out;
    for (int k = 0; k <= kmax; ++k)
        out.push_back({n, d, k, collect_symmetric(parts[static_cast<std::size_t>(k)], n)});
    return out;
}

inline SymFunc chern_class(int n, int d, int k, Basis basis, long budget = default_oracle_budget)
{
    return convert_basis(chern_oracle(n, d, k, budget)[static_cast<std::size_t>(k)].value, basis);
}

// E_{n,d} = prod_alpha (alpha.x), the top Chern class, in the m-basis.
inline SymFunc euler_class_oracle(int n, int d, long budget = default_oracle_budget)
{
    check_budget(n, d, budget);
    auto vars = x_vars(n);
    MPoly total = MPoly::constant(vars, 1);
    for (const auto& alpha : weak_compositions(n, d)) {
        MPoly factor(vars);
        for (int i = 0; i < n; ++i)
            if (alpha.entries[static_cast<std::size_t>(i)])
                factor += MPoly::variable(vars, vars[static_cast<std::size_t>(i)]) *
                          Rational(alpha.entries[static_cast<std::size_t>(i)]);
        total *= factor;
    }
    return collect_symmetric(total, n);
}

// M_mu = sum_alpha prod_j alpha_j^{mu_j} = sum_R c_R T_R, returned as {R: c_R}.
// Each power is expanded in falling factorials through Stirling numbers of
// the second kind, and sum_alpha prod_j C(alpha_j, r_j) = T_{r_1+...+r_s}.
inline std::map<int, Integer> moment_coefficients(const Partition& mu)
{
    std::map<int, Integer> out;
    const auto& parts = mu.parts();
    std::vector<int> r(parts.size(), 1);
    if (parts.empty()) {
        out[0] = 1;
        return out;
    }
    while (true) {
        Integer c = 1;
        int total = 0;
        for (std::size_t j = 0; j < parts.size(); ++j) {
            c *= stirling2(parts[j], r[j]) * factorial(static_cast<unsigned long>(r[j]));
            total += r[j];
        }
        out[total] += c;
        std::size_t j = 0;
        while (j < parts.size() && r[j] == parts[j])
            r[j++] = 1;
        if (j == parts.size())
            break;
        ++r[j];
    }
    return out;
}

// P_m(n,d) = sum_alpha (alpha.x)^m in the m-basis.
inline SymFunc power_sum_moment(int n, int d, int m)
{
    if (m < 1)
        throw std::invalid_argument("power_sum_moment: m must be positive");
    SymFunc out(Basis::m, n);
    for (const auto& mu : partitions_of(m, n)) {
        Integer moment = 0;
        for (const auto& [R, c] : moment_coefficients(mu))
            moment += c * t_value(n, d, R);
        out.add(mu, Rational(multinomial(m, mu.parts()) * moment));
    }
    return out;
}

namespace detail {

// P_m with T-polynomial coordinates, in the e-basis.
inline TSymFunc symbolic_power_sum(int m)
{
    auto vars = t_vars(m);
    TSymFunc mono(Basis::m, m);
    for (const auto& mu : partitions_of(m)) {
        MPoly moment(vars);
        for (const auto& [R, c] : moment_coefficients(mu))
            moment += MPoly::variable(vars, t_var(R)) * Rational(c);
        mono.add(mu, moment * Rational(multinomial(m, mu.parts())));
    }
    return convert_basis(mono, Basis::e);
}

// e-basis product: e_lambda e_mu = e_{lambda + mu}.
template <class Coeff>
BasicSymFunc<Coeff> e_product(const BasicSymFunc<Coeff>& a, const BasicSymFunc<Coeff>& b)
{
    BasicSymFunc<Coeff> out(Basis::e, std::max(a.n, b.n));
    for (const auto& [la, ca] : a.coords)
        for (const auto& [lb, cb] : b.coords) {
            std::vector<int> parts = la.parts();
            parts.insert(parts.end(), lb.parts().begin(), lb.parts().end());
            out.add(Partition(std::move(parts)), ca * cb);
        }
    return out;
}

class UniversalCache {
public:
    static UniversalCache& instance()
    {
        static UniversalCache c;
        return c;
    }

    TSymFunc get(int k)
    {
        std::lock_guard lock(mu_);
        if (c_.empty()) {
            TSymFunc one(Basis::e, 1);
            one.add(Partition(), MPoly::constant(1));
            c_.push_back(one);
        }
        while (static_cast<int>(c_.size()) <= k) {
            const int K = static_cast<int>(c_.size());
            p_.push_back(symbolic_power_sum(K));  // p_[K-1] = P_K
            // K c_K = sum_{j=1}^{K} (-1)^{j-1} c_{K-j} P_j
            TSymFunc acc(Basis::e, K);
            for (int j = 1; j <= K; ++j) {
                TSymFunc term = e_product(c_[static_cast<std::size_t>(K - j)], p_[static_cast<std::size_t>(j - 1)]);
                const Rational sign = (j % 2) ? 1 : -1;
                for (const auto& [l, c] : term.coords)
                    acc.add(l, c * sign);
            }
            TSymFunc ck(Basis::e, K);
            for (const auto& [l, c] : acc.coords)
                ck.add(l, (c * (Rational(1) / Rational(K))).with_vars(t_vars(K)).compact());
            c_.push_back(ck);
        }
        return c_[static_cast<std::size_t>(k)];
    }

private:
    std::mutex mu_;
    std::vector<TSymFunc> c_;
    std::vector<TSymFunc> p_;
};

} // namespace detail

// c_k as a combination of e_lambda with coefficients in Q[T1..Tk].
inline TSymFunc universal_chern(int k)
{
    if (k < 0)
        throw std::invalid_argument("universal_chern: negative k");
    return detail::UniversalCache::instance().get(k);
}

inline std::string e_var(int r) { return "e" + std::to_string(r); }

// Q_k as a single polynomial in T1..Tk and e1..ek.
inline MPoly universal_Qk(int k)
{
    std::vector<std::string> vars = t_vars(k);
    for (int r = 1; r <= k; ++r)
        vars.push_back(e_var(r));
    MPoly out(vars);
    for (const auto& [l, c] : universal_chern(k).coords) {
        MPoly term = c.with_vars(vars);
        for (int part : l.parts())
            term *= MPoly::variable(vars, e_var(part));
        out += term;
    }
    return out;
}

// Schur-basis form of c_k with coefficients in Q[T1..Tk].
inline TSymFunc universal_schur(int k)
{
    TSymFunc e = universal_chern(k);
    e.n = std::max(k, 1);
    return convert_basis(e, Basis::s);
}

// Specializes a T-coefficient symmetric function at (n,d) and restricts it to
// n variables (e_r and s_lambda with too many rows vanish there).
inline SymFunc specialize(const TSymFunc& f, int n, int d)
{
    int kmax = 0;
    for (const auto& [l, c] : f.coords)
        for (const auto& v : c.vars())
            if (v.size() > 1 && v[0] == 'T')
                kmax = std::max(kmax, std::stoi(v.substr(1)));
    auto pt = t_point(n, d, kmax);
    SymFunc out(f.basis, n);
    for (const auto& [l, c] : f.coords) {
        bool vanishes = (f.basis == Basis::e) ? l.largest() > n : l.length() > n;
        if (!vanishes)
            out.add(l, c.evaluate(pt));
    }
    return out;
}

inline SymFunc chern_from_universal(int k, int n, int d) { return specialize(universal_chern(k), n, d); }

// e-basis coefficient of c_k(n,d), evaluated from the universal polynomial.
inline Rational f_lambda(int n, int d, const Partition& l)
{
    TSymFunc u = universal_chern(l.size());
    auto it = u.coords.find(l);
    if (it == u.coords.end())
        return 0;
    return it->second.evaluate(t_point(n, d, l.size()));
}

// C(d+n, n+1) e_2 + (C(d+n-1,n)^2/2 - C(d+n-1,n)/2 - C(d+n-1,n+1)) e_1^2.
inline SymFunc c2_closed(int n, int d)
{
    SymFunc out(Basis::e, n);
    Rational a(binomial(Integer(d + n - 1), n));
    Rational b(binomial(Integer(d + n - 1), n + 1));
    out.add(Partition{1, 1}, a * a / 2 - a / 2 - b);
    if (n >= 2)
        out.add(Partition{2}, Rational(binomial(Integer(d + n), n + 1)));
    return out;
}

// Interpolates f_lambda(., d) in n from n = 1..samples, validates at one more
// point, and checks degree (d-1) l(lambda) and leading coefficient
// 1 / (prod m_i! ((d-1)!)^{l(lambda)}).
inline VerificationReport leading_term_check(const Partition& l, int d, int samples = -1)
{
    Stopwatch sw;
    VerificationReport rep;
    rep.target = "leading-term";
    const int len = l.length();
    const int expected_degree = (d - 1) * len;
    if (samples < 0)
        samples = l.size() * std::max(d - 1, 1) + 2;
    rep.range = "lambda=" + l.str() + " d=" + std::to_string(d) + " samples=" + std::to_string(samples);
    if (d < 2) {
        rep.precondition(rep.range, "d must be at least 2");
        return rep;
    }
    std::vector<std::pair<Rational, Rational>> pts;
    for (int n = 1; n <= samples; ++n)
        pts.emplace_back(Rational(n), f_lambda(n, d, l));
    UPoly p = interpolate(pts);
    const int check_n = samples + 1;
    if (p(Rational(check_n)) != f_lambda(check_n, d, l)) {
        rep.fail(rep.range, "interpolant misses the validation point n=" + std::to_string(check_n));
        rep.elapsed_ms = sw.ms();
        return rep;
    }
    Integer denom = pow(factorial(static_cast<unsigned long>(d - 1)), static_cast<unsigned long>(len));
    auto mult = l.multiplicities();
    for (std::size_t i = 1; i < mult.size(); ++i)
        denom *= factorial(static_cast<unsigned long>(mult[i]));
    const Rational expected_lead = make_rational(1, denom);
    if (p.degree() != expected_degree || p.leading() != expected_lead)
        rep.fail(rep.range, "degree " + std::to_string(p.degree()) + " leading " + to_string(p.leading()) +
                                ", expected degree " + std::to_string(expected_degree) + " leading " +
                                to_string(expected_lead));
    rep.elapsed_ms = sw.ms();
    return rep;
}

// A_lambda(n) = 2^{k - C(n,2)} det[C(2n-2j+1, lambda_i+n-i)], the Schur
// coefficients of c_k(n,2).
inline Rational d2_schur_coeff(const Partition& l, int n)
{
    if (l.length() > n)
        throw std::invalid_argument("d2_schur_coeff: partition longer than n");
    RationalMatrix a(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                Rational(binomial(Integer(2 * n - 2 * j + 1), l[static_cast<std::size_t>(i - 1)] + n - i));
    const long e = l.size() - static_cast<long>(n) * (n - 1) / 2;
    Rational scale = e >= 0 ? Rational(pow(Integer(2), static_cast<unsigned long>(e)))
                           : make_rational(1, pow(Integer(2), static_cast<unsigned long>(-e)));
    return scale * determinant(std::move(a));
}

// gamma_{d,b} = sum_{r=b-1}^{d} (-1)^{r-b} C(r+1,b) d^{d+1-r} [d+1, d+1-r],
// the coefficient of s_(d+1-b,b) in the rank-two Euler class.
inline Integer euler_gamma_rank2(int d, int b)
{
    if (b < 0 || b > (d + 1) / 2)
        throw std::invalid_argument("euler_gamma_rank2: b out of range");
    Integer acc = 0;
    for (int r = std::max(b - 1, 0); r <= d; ++r) {
        Integer term = binomial(Integer(r + 1), b) * pow(Integer(d), static_cast<unsigned long>(d + 1 - r)) *
                       stirling1_unsigned(d + 1, d + 1 - r);
        acc += ((r - b) % 2 == 0) ? term : Integer(-term);
    }
    return acc;
}

} // namespace symchern
