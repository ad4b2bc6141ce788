#include "symchern/plucker.hpp"

#include <gtest/gtest.h>

using namespace symchern;

namespace {

BinomialSeries series(std::initializer_list<long> v)
{
    std::vector<Rational> c;
    for (long x : v)
        c.emplace_back(x);
    return BinomialSeries(std::move(c));
}

// C_r = (Delta^r Q)(0), by repeated forward differences of the values.
BinomialSeries forward_differences(const UPoly& q)
{
    const long D = std::max<long>(q.degree(), 0);
    std::vector<Rational> v;
    for (long x = 0; x <= D; ++x)
        v.push_back(q(Rational(x)));
    std::vector<Rational> out;
    while (!v.empty()) {
        out.push_back(v.front());
        for (std::size_t i = 0; i + 1 < v.size(); ++i)
            v[i] = v[i + 1] - v[i];
        v.pop_back();
    }
    return BinomialSeries(std::move(out));
}

UPoly root(long a) { return UPoly::linear_root(Rational(-a)); }  // x + a

} // namespace

TEST(Plucker, BuiltinVectorsMatchReferences)
{
    auto vs = builtin_vectors();
    ASSERT_EQ(vs.size(), 4u);
    for (const auto& v : vs) {
        ASSERT_TRUE(v.expected);
        EXPECT_EQ(v.C, *v.expected) << v.label;
        EXPECT_EQ(forward_differences(v.Q), v.C) << v.label;
        EXPECT_EQ(v.Q.shift(Rational(-v.N)), v.P) << v.label;
        EXPECT_TRUE(check_shifted_conjectures(v).passed()) << v.label;
    }
}

TEST(Plucker, IndexBookkeeping)
{
    auto vs = builtin_vectors();
    EXPECT_EQ(vs[1].pl_index, 0);
    EXPECT_EQ(vs[1].i, 1);
    EXPECT_EQ(vs[2].pl_index, 1);
    EXPECT_EQ(vs[2].i, 2);
    EXPECT_EQ(vs[3].i, 3);
    EXPECT_EQ(vs[3].pl_index, 2);
    EXPECT_EQ(codim(Partition{3, 3}), 4);
    EXPECT_THROW(schur_index_from_pl(Partition{2, 2}, 1), std::invalid_argument);
    EXPECT_THROW(shifted_datum(Partition{2, 2}, 0, UPoly::x()), std::invalid_argument);
    EXPECT_THROW(shifted_datum(Partition{2, 1}, 1, UPoly::x()), std::invalid_argument);
    EXPECT_THROW(top_plucker(Partition()), std::invalid_argument);
}

TEST(Plucker, FactoredShiftedForms)
{
    auto vs = builtin_vectors();
    EXPECT_EQ(vs[1].Q, root(4) * root(2) * root(1) * root(7) * Rational(1, 2));
    EXPECT_EQ(vs[2].Q, root(6) * root(1) * root(2) * root(3) * UPoly({Rational(52), Rational(15), Rational(1)}) *
                           Rational(1, 3));
    EXPECT_EQ(vs[3].Q, root(1) * root(2) * root(6) * plucker_33_cubic() * Rational(1, 2));
}

TEST(Plucker, Discriminants)
{
    EXPECT_EQ(discriminant(plucker_33_cubic()), -96548);
    EXPECT_EQ(discriminant(plucker_33_quartic()), -975021840);
    // the generating polynomial of the (3,3) coefficients factors through the quartic
    const BinomialSeries C = builtin_vectors()[3].C;
    UPoly gen(C.coeffs());
    UPoly z1 = root(1);
    EXPECT_EQ(gen, z1 * z1 * plucker_33_quartic() * Rational(18));
}

TEST(Plucker, Flex)
{
    PluckerDatum f = flex_datum();
    EXPECT_EQ(to_binomial_basis(f.P), series({0, -3, 6}));
    EXPECT_EQ(f.C, series({9, 15, 6}));
    EXPECT_EQ(forward_differences(f.Q), f.C);
    EXPECT_TRUE(check_shifted_conjectures(f).passed());
}

TEST(Plucker, TopCoefficientsClosedForm)
{
    for (int a = 2; a <= 4; ++a) {
        for (int len = 1; len <= 3; ++len) {
            // partitions with parts in {2,3,4}, largest part a, length len
            std::vector<std::vector<int>> todo{{a}};
            while (!todo.empty()) {
                auto p = todo.back();
                todo.pop_back();
                if (static_cast<int>(p.size()) == len) {
                    Partition l(p);
                    PluckerDatum t = top_plucker(l);
                    EXPECT_EQ(t.C, top_plucker_closed(l)) << l.str();
                    EXPECT_EQ(forward_differences(t.Q), t.C) << l.str();
                    EXPECT_TRUE(check_shifted_conjectures(t).passed()) << l.str();
                    continue;
                }
                for (int q = 2; q <= p.back(); ++q) {
                    auto np = p;
                    np.push_back(q);
                    todo.push_back(np);
                }
            }
        }
    }
    EXPECT_EQ(top_plucker(Partition{3}).C, series({6, 18, 18, 6}));
    EXPECT_EQ(top_plucker(Partition{2, 2}).C, series({12, 48, 72, 48, 12}));
}

TEST(Plucker, ConjectureChecksDetectFailures)
{
    PluckerDatum bad = shifted_datum(Partition{2}, 1, UPoly({Rational(-5), Rational(1)}), "bad");
    auto r = check_shifted_conjectures(bad);
    EXPECT_EQ(r.status, Status::fail);
    EXPECT_FALSE(r.counterexamples.empty());
    PluckerDatum wrong = builtin_vectors()[1];
    wrong.expected = series({1});
    EXPECT_EQ(check_shifted_conjectures(wrong).status, Status::fail);
}

TEST(Csm, ShiftedCheck)
{
    auto one = csm_shifted_check(Partition{2}, 1, 1, UPoly::constant(1));
    EXPECT_TRUE(one.report.passed());
    EXPECT_EQ(one.gamma, series({1}));

    // f = c on the top coefficient reduces to the Pluecker top check
    PluckerDatum top = top_plucker(Partition{2, 2});
    auto t = csm_shifted_check(Partition{2, 2}, 2, 2, top.P);
    EXPECT_TRUE(t.report.passed());
    EXPECT_EQ(t.gamma, top.C);

    auto neg = csm_shifted_check(Partition{2}, 1, 1, UPoly({Rational(-3), Rational(1)}));
    EXPECT_EQ(neg.gamma, series({-1, 1}));
    EXPECT_EQ(neg.report.status, Status::fail);

    EXPECT_EQ(csm_shifted_check(Partition{2, 2}, 1, 2, top.P).report.status, Status::precondition_violated);
    EXPECT_EQ(csm_shifted_check(Partition{2, 2}, 3, 1, top.P).report.status, Status::precondition_violated);
    EXPECT_EQ(csm_shifted_check(Partition{2, 1}, 2, 1, top.P).report.status, Status::precondition_violated);

    // f > c shifts further by 2(f - c)
    auto far = csm_shifted_check(Partition{2}, 3, 1, UPoly::x());
    EXPECT_EQ(far.gamma, series({6, 1}));
}
