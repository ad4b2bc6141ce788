#include "symchern/chern.hpp"
#include "symchern/ktheory.hpp"
#include "symchern/parse.hpp"

#include <gtest/gtest.h>

using namespace symchern;

namespace {

// Full product without truncation; only for tiny (n,d).
MPoly nn_untruncated(int n, int d)
{
    MPoly z = MPoly::variable("z"), zeta = MPoly::variable("zeta"), one = MPoly::constant(1);
    MPoly total = one;
    for (const auto& a : weak_compositions(n, d)) {
        MPoly prod = one;
        for (int j = 0; j < n; ++j)
            prod *= (one - zeta * MPoly::variable("u" + std::to_string(j + 1)))
                        .pow(static_cast<unsigned>(a.entries[static_cast<std::size_t>(j)]));
        total *= one + z * (one - prod);
    }
    return total;
}

TSymFunc tsym(std::initializer_list<std::pair<Partition, const char*>> terms)
{
    TSymFunc f(Basis::e, 3);
    for (const auto& [l, text] : terms)
        f.add(l, parse_mpoly(text, t_vars(3)));
    return f;
}

void expect_same(const TSymFunc& got, const TSymFunc& want)
{
    EXPECT_EQ(got.coords.size(), want.coords.size()) << got.str();
    for (const auto& [l, c] : want.coords)
        EXPECT_EQ(got.coefficient(l), c) << l.str() << " in " << got.str();
}

} // namespace

TEST(NN, TruncatedExamples)
{
    NNExpansion nn = nn_truncated(2, 1, 2, 2);
    EXPECT_EQ(nn.coefficient(0, 0), MPoly::constant(1));
    EXPECT_TRUE(nn.coefficient(2, 1).is_zero());
    EXPECT_TRUE(nn.vanishing_law_holds());
    // T1(2,1) = C(2,2) = 1
    EXPECT_EQ(nn_coefficient(2, 1, 1, 1).str(), "e[1]");
    EXPECT_EQ(nn_coefficient(2, 2, 1, 2).str(), "-e[1,1] + e[2]");
    EXPECT_TRUE(nn_coefficient(3, 2, 3, 2).coords.empty());
}

TEST(NN, TruncationAgreesWithFullProduct)
{
    for (int d = 1; d <= 2; ++d) {
        MPoly full = nn_untruncated(2, d);
        NNExpansion nn = nn_truncated(2, d, 3, 3);
        for (int m = 0; m <= 3; ++m)
            for (int q = 0; q <= 3; ++q) {
                MPoly want = full.coefficient({{"z", q}, {"zeta", m}});
                EXPECT_EQ(nn.coefficient(q, m), want) << "d=" << d << " q=" << q << " m=" << m;
            }
    }
}

TEST(NN, PrintedSmallCoefficients)
{
    expect_same(nn_symbolic_T(1, 1), tsym({{Partition{1}, "T1"}}));
    expect_same(nn_symbolic_T(1, 2), tsym({{Partition{1, 1}, "-T2"}, {Partition{2}, "T2"}}));
    expect_same(nn_symbolic_T(2, 2), tsym({{Partition{1, 1}, "(T1^2-T1-2*T2)/2"}, {Partition{2}, "T1+T2"}}));
    expect_same(nn_symbolic_T(1, 3), tsym({{Partition{1, 1, 1}, "T3"}, {Partition{2, 1}, "-2*T3"}, {Partition{3}, "T3"}}));
    expect_same(nn_symbolic_T(2, 3), tsym({{Partition{1, 1, 1}, "3*T3+2*T2-T1*T2"},
                                           {Partition{2, 1}, "T1*T2-6*T3-5*T2"},
                                           {Partition{3}, "3*T3+3*T2"}}));
    expect_same(nn_symbolic_T(3, 3), tsym({{Partition{1, 1, 1}, "(T1^3-3*T1^2-6*T1*T2+12*T3+12*T2+2*T1)/6"},
                                           {Partition{2, 1}, "T1^2+T1*T2-4*T3-5*T2-T1"},
                                           {Partition{3}, "2*T3+3*T2+T1"}}));
    EXPECT_TRUE(nn_symbolic_T(3, 2).coords.empty());
}

TEST(NN, DiagonalRecoveryAndVanishingOnGrid)
{
    for (int n = 2; n <= 3; ++n)
        for (int d = 1; d <= 3; ++d) {
            EXPECT_TRUE(nn_truncated(n, d, 4, 3).vanishing_law_holds()) << n << "," << d;
            auto classes = chern_oracle(n, d, 3);
            for (int m = 0; m <= 3; ++m) {
                EXPECT_EQ(nn_coefficient(n, d, m, m), convert_basis(classes[static_cast<std::size_t>(m)].value, Basis::e));
                for (int q = m + 1; q <= 4; ++q)
                    EXPECT_TRUE(nn_coefficient(n, d, q, m).coords.empty());
            }
        }
}

TEST(NN, SymbolicSpecializationMatchesExpansion)
{
    for (int n = 2; n <= 3; ++n)
        for (int d = 1; d <= 3; ++d)
            for (int m = 0; m <= 3; ++m)
                for (int q = 0; q <= m; ++q)
                    EXPECT_EQ(specialize(nn_symbolic_T(q, m), n, d), nn_coefficient(n, d, q, m))
                        << "n=" << n << " d=" << d << " q=" << q << " m=" << m;
}

TEST(NN, DiagonalSymbolicEqualsUniversalChern)
{
    for (int k = 0; k <= 3; ++k) {
        TSymFunc nn = nn_symbolic_T(k, k);
        TSymFunc c = universal_chern(k);
        for (const auto& [l, coeff] : c.coords)
            EXPECT_EQ(nn.coefficient(l), coeff) << "k=" << k << " " << l.str();
    }
}

TEST(NN, BudgetAndArguments)
{
    EXPECT_THROW(nn_truncated(4, 200, 1, 1), BudgetExceeded);
    EXPECT_THROW(nn_symbolic_T(-1, 2), std::invalid_argument);
}
