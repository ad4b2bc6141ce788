#include "symchern/chern.hpp"
#include "symchern/linalg.hpp"
#include "symchern/parse.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <random>

using namespace symchern;

namespace {

// e_k of the weights alpha.x evaluated at an integer point, by the
// elementary recurrence on the list of root values.
std::vector<Integer> numeric_chern(int n, int d, const std::vector<long>& x, int kmax)
{
    std::vector<Integer> e(static_cast<std::size_t>(kmax + 1), Integer(0));
    e[0] = 1;
    for (const auto& a : weak_compositions(n, d)) {
        Integer y = 0;
        for (int i = 0; i < n; ++i)
            y += Integer(a.entries[static_cast<std::size_t>(i)]) * x[static_cast<std::size_t>(i)];
        for (int k = kmax; k >= 1; --k)
            e[static_cast<std::size_t>(k)] += y * e[static_cast<std::size_t>(k - 1)];
    }
    return e;
}

Rational evaluate_at(const SymFunc& f, const std::vector<long>& x)
{
    std::map<std::string, Rational> pt;
    for (std::size_t i = 0; i < x.size(); ++i)
        pt["x" + std::to_string(i + 1)] = Rational(x[i]);
    return expand_to_monomials(f).with_vars(x_vars(f.n)).evaluate(pt);
}

} // namespace

TEST(TValues, Definition)
{
    EXPECT_EQ(t_value(2, 2, 1), 3);
    EXPECT_EQ(t_value(2, 2, 2), 1);
    EXPECT_EQ(t_value(2, 3, 1), 6);
    for (int n = 1; n <= 5; ++n)
        for (int d = 0; d <= 5; ++d)
            for (int r = 1; r <= 7; ++r) {
                EXPECT_GE(t_value(n, d, r), 0);
                if (r > d)
                    EXPECT_EQ(t_value(n, d, r), 0);
            }
}

TEST(ChernOracle, SmallExamples)
{
    auto c = chern_oracle(2, 2, 3);
    EXPECT_EQ(convert_basis(c[0].value, Basis::e).str(), "1");
    EXPECT_EQ(convert_basis(c[1].value, Basis::e).str(), "3*e[1]");
    EXPECT_EQ(convert_basis(c[2].value, Basis::e).str(), "2*e[1,1] + 4*e[2]");
    EXPECT_THROW(chern_oracle(3, 200, 2), BudgetExceeded);
    EXPECT_EQ(convert_basis(chern_oracle(5, 3, 0)[0].value, Basis::s).str(), "1");
}

TEST(ChernOracle, MatchesNumericEvaluation)
{
    std::mt19937_64 rng(20260101);
    std::uniform_int_distribution<long> coord(-4, 4);
    for (int n = 1; n <= 3; ++n)
        for (int d = 0; d <= 4; ++d) {
            auto classes = chern_oracle(n, d, 4);
            for (int t = 0; t < 3; ++t) {
                std::vector<long> x(static_cast<std::size_t>(n));
                for (auto& v : x)
                    v = coord(rng);
                auto want = numeric_chern(n, d, x, 4);
                for (int k = 0; k <= 4; ++k)
                    EXPECT_EQ(evaluate_at(classes[static_cast<std::size_t>(k)].value, x), Rational(want[static_cast<std::size_t>(k)]))
                        << "n=" << n << " d=" << d << " k=" << k;
            }
        }
}

TEST(PowerSums, Examples)
{
    EXPECT_EQ(convert_basis(power_sum_moment(2, 2, 1), Basis::e).str(), "3*e[1]");
    EXPECT_EQ(convert_basis(power_sum_moment(2, 2, 2), Basis::e).str(), "5*e[1,1] - 8*e[2]");
    EXPECT_TRUE(power_sum_moment(3, 0, 1).coords.empty());
}

TEST(PowerSums, MatchDirectSums)
{
    for (int n = 1; n <= 3; ++n)
        for (int d = 0; d <= 5; ++d)
            for (int m = 1; m <= 5; ++m) {
                auto vars = x_vars(n);
                MPoly direct(vars);
                for (const auto& a : weak_compositions(n, d)) {
                    MPoly y(vars);
                    for (int i = 0; i < n; ++i)
                        y += MPoly::variable(vars, vars[static_cast<std::size_t>(i)]) * Rational(a.entries[static_cast<std::size_t>(i)]);
                    direct += y.pow(static_cast<unsigned>(m));
                }
                EXPECT_EQ(power_sum_moment(n, d, m), collect_symmetric(direct, n)) << n << "," << d << "," << m;
            }
}

TEST(PowerSums, MomentCoefficients)
{
    // M_mu = sum_alpha prod alpha_j^{mu_j}: compare with direct sums
    for (const auto& mu : {Partition{1}, Partition{2}, Partition{2, 1}, Partition{3, 1, 1}, Partition{2, 2}})
        for (int n = mu.length(); n <= 4; ++n)
            for (int d = 0; d <= 5; ++d) {
                Integer direct = 0;
                for (const auto& a : weak_compositions(n, d)) {
                    Integer p = 1;
                    for (std::size_t j = 0; j < mu.parts().size(); ++j)
                        p *= pow(Integer(a.entries[j]), static_cast<unsigned long>(mu.parts()[j]));
                    direct += p;
                }
                Integer via_t = 0;
                for (const auto& [R, c] : moment_coefficients(mu))
                    via_t += c * t_value(n, d, R);
                EXPECT_EQ(via_t, direct) << mu.str() << " n=" << n << " d=" << d;
            }
}

TEST(Universal, PrintedSmallCases)
{
    auto t = [](int k) {
        std::vector<std::string> v = t_vars(k);
        for (int r = 1; r <= k; ++r)
            v.push_back(e_var(r));
        return v;
    };
    EXPECT_EQ(universal_Qk(1), parse_mpoly("T1*e1", t(1)));
    EXPECT_EQ(universal_Qk(2), parse_mpoly("(T1^2-T1-2*T2)/2*e1^2 + (T1+T2)*e2", t(2)));
    EXPECT_EQ(universal_Qk(3), parse_mpoly("(T1^3-3*T1^2-6*T1*T2+2*T1+12*T2+12*T3)/6*e1^3"
                                           " + (T1^2+T1*T2-T1-5*T2-4*T3)*e1*e2 + (T1+3*T2+2*T3)*e3",
                                           t(3)));
    EXPECT_EQ(universal_chern(0).str(), "1");
}

TEST(Universal, SpecializationMatchesOracle)
{
    for (int n = 2; n <= 4; ++n)
        for (int d = 2; d <= 4; ++d) {
            auto classes = chern_oracle(n, d, 4);
            for (int k = 0; k <= 4; ++k)
                EXPECT_EQ(chern_from_universal(k, n, d), convert_basis(classes[static_cast<std::size_t>(k)].value, Basis::e))
                    << "n=" << n << " d=" << d << " k=" << k;
        }
}

TEST(Universal, FLambda)
{
    EXPECT_EQ(f_lambda(2, 3, Partition{1}), 6);
    EXPECT_EQ(f_lambda(2, 2, Partition{2}), 4);
    EXPECT_EQ(f_lambda(2, 2, Partition{1, 1}), 2);
}

// Fits every Schur coefficient of c_k(n,d), k <= 3, by the T-monomials of
// total degree <= k over a grid, validates on held-out cells, and compares
// with the Schur form of the universal polynomial.
TEST(Universal, SchurCoefficientsArePolynomialsInT)
{
    for (int k = 1; k <= 3; ++k) {
        std::vector<std::vector<int>> monos;  // exponents of T1..Tk
        std::function<void(std::vector<int>&, int)> rec = [&](std::vector<int>& e, int left) {
            if (e.size() == static_cast<std::size_t>(k)) {
                monos.push_back(e);
                return;
            }
            for (int a = 0; a <= left; ++a) {
                e.push_back(a);
                rec(e, left - a);
                e.pop_back();
            }
        };
        std::vector<int> e;
        rec(e, k);

        std::vector<std::pair<int, int>> grid;
        for (int n = k; n <= k + 3; ++n)
            for (int d = 1; d <= 8; ++d)
                grid.emplace_back(n, d);
        std::map<std::pair<int, int>, SymFunc> schur;
        for (auto [n, d] : grid)
            schur.emplace(std::pair{n, d}, convert_basis(chern_oracle(n, d, k)[static_cast<std::size_t>(k)].value, Basis::s));

        auto row_of = [&](int n, int d) {
            std::vector<Rational> row;
            for (const auto& m : monos) {
                Integer v = 1;
                for (int r = 1; r <= k; ++r)
                    v *= pow(t_value(n, d, r), static_cast<unsigned long>(m[static_cast<std::size_t>(r - 1)]));
                row.emplace_back(v);
            }
            return row;
        };
        const std::size_t train = grid.size() - 4;
        RationalMatrix a;
        for (std::size_t g = 0; g < train; ++g)
            a.push_back(row_of(grid[g].first, grid[g].second));
        ASSERT_EQ(rank(a), monos.size()) << "grid does not determine the fit for k=" << k;

        TSymFunc universal = universal_schur(k);
        for (const auto& l : partitions_of(k)) {
            std::vector<Rational> b;
            for (std::size_t g = 0; g < train; ++g)
                b.push_back(schur.at(grid[g]).coefficient(l));
            auto sol = solve_consistent(a, b);
            ASSERT_TRUE(sol) << "no T-polynomial fits s" << l.str();
            for (std::size_t g = train; g < grid.size(); ++g) {
                auto row = row_of(grid[g].first, grid[g].second);
                Rational pred = 0;
                for (std::size_t i = 0; i < row.size(); ++i)
                    pred += row[i] * (*sol)[i];
                EXPECT_EQ(pred, schur.at(grid[g]).coefficient(l)) << "held-out cell " << grid[g].first << "," << grid[g].second;
            }
            MPoly fitted(t_vars(k));
            for (std::size_t i = 0; i < monos.size(); ++i) {
                Exponent ex(monos[i].begin(), monos[i].end());
                fitted += MPoly::monomial(t_vars(k), ex, (*sol)[i]);
            }
            EXPECT_EQ(fitted, universal.coefficient(l)) << "s" << l.str();
        }
    }
}

TEST(C2, ClosedFormMatchesOracle)
{
    for (int n = 2; n <= 4; ++n)
        for (int d = 2; d <= 4; ++d)
            EXPECT_EQ(c2_closed(n, d), chern_class(n, d, 2, Basis::e)) << n << "," << d;
}

TEST(LeadingTerms, Examples)
{
    for (const auto& [l, d] : std::vector<std::pair<Partition, int>>{{Partition{1}, 3}, {Partition{1, 1}, 2}, {Partition{2}, 2}})
        EXPECT_TRUE(leading_term_check(l, d).passed()) << l.str() << " d=" << d;
    EXPECT_EQ(leading_term_check(Partition{1}, 1).status, Status::precondition_violated);
}

TEST(LeadingTerms, AllSmallPartitions)
{
    for (int k = 1; k <= 3; ++k)
        for (const auto& l : partitions_of(k))
            for (int d : {2, 3}) {
                auto r = leading_term_check(l, d);
                EXPECT_TRUE(r.passed()) << r.range;
            }
}

TEST(D2, Examples)
{
    EXPECT_EQ(d2_schur_coeff(Partition{1}, 3), 4);
    EXPECT_EQ(d2_schur_coeff(Partition{2}, 3), 5);
    EXPECT_EQ(d2_schur_coeff(Partition{1, 1, 1}, 3), 20);
    EXPECT_THROW(d2_schur_coeff(Partition{1, 1, 1}, 2), std::invalid_argument);
}

TEST(D2, PrintedRows)
{
    for (int n = 2; n <= 6; ++n) {
        const Rational N(n);
        EXPECT_EQ(d2_schur_coeff(Partition{1}, n), N + 1);
        EXPECT_EQ(d2_schur_coeff(Partition{2}, n), (N - 1) * (N + 2) / 2);
        EXPECT_EQ(d2_schur_coeff(Partition{1, 1}, n), (N + 1) * (N + 2) / 2);
        EXPECT_EQ(d2_schur_coeff(Partition{3}, n), (N - 2) * (N - 1) * (N + 3) / 6);
        EXPECT_EQ(d2_schur_coeff(Partition{2, 1}, n), (N + 2) * (N * N + N - 3) / 3);
        if (n >= 3)
            EXPECT_EQ(d2_schur_coeff(Partition{1, 1, 1}, n), (N + 1) * (N + 2) * (N + 3) / 6);
    }
}

TEST(D2, MatchesOracle)
{
    for (int n = 2; n <= 4; ++n) {
        auto classes = chern_oracle(n, 2, 4);
        for (int k = 0; k <= 4; ++k) {
            SymFunc s = convert_basis(classes[static_cast<std::size_t>(k)].value, Basis::s);
            for (const auto& l : partitions_of(k, n))
                EXPECT_EQ(d2_schur_coeff(l, n), s.coefficient(l)) << "n=" << n << " " << l.str();
        }
    }
}

TEST(Euler, Examples)
{
    EXPECT_EQ(euler_gamma_rank2(2, 1), 4);
    EXPECT_EQ(euler_gamma_rank2(2, 0), 0);
    EXPECT_EQ(euler_gamma_rank2(1, 1), 1);
    EXPECT_THROW(euler_gamma_rank2(2, 2), std::invalid_argument);
}

TEST(Euler, MatchesOracleTopClass)
{
    for (int d = 1; d <= 7; ++d) {
        SymFunc top = convert_basis(euler_class_oracle(2, d), Basis::s);
        EXPECT_EQ(top, chern_class(2, d, d + 1, Basis::s));
        SymFunc closed(Basis::s, 2);
        for (int b = 0; 2 * b <= d + 1; ++b)
            closed.add(Partition{d + 1 - b, b}, Rational(euler_gamma_rank2(d, b)));
        EXPECT_EQ(closed, top) << "d=" << d;
    }
}

TEST(Budget, CountsWeights)
{
    EXPECT_EQ(weight_count(3, 4), 15);
    EXPECT_NO_THROW(check_budget(3, 4, 15));
    EXPECT_THROW(check_budget(3, 4, 14), BudgetExceeded);
    EXPECT_THROW(check_budget(0, 1, 10), std::invalid_argument);
}
