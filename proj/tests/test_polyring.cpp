#include "symchern/binomial_series.hpp"
#include "symchern/mpoly.hpp"
#include "symchern/parse.hpp"
#include "symchern/upoly.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace symchern;

namespace {

struct Gen {
    std::mt19937_64 rng{20260101};
    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
    Rational rational(int span = 9) { return make_rational(uniform(-span, span), uniform(1, 4)); }
    UPoly upoly(int max_degree)
    {
        std::vector<Rational> c(static_cast<std::size_t>(uniform(0, max_degree) + 1));
        for (auto& x : c)
            x = rational();
        return UPoly(c);
    }
    MPoly mpoly_ab(int max_degree)
    {
        const std::vector<std::string> vars{"a", "b", "t"};
        MPoly p(vars);
        for (int i = 0, n = uniform(0, 5); i < n; ++i)
            p += MPoly::monomial(vars, {uniform(0, max_degree), uniform(0, max_degree), uniform(0, 1)}, rational());
        return p;
    }
};

BinomialSeries series(std::initializer_list<long> v)
{
    std::vector<Rational> c;
    for (long x : v)
        c.emplace_back(x);
    return BinomialSeries(std::move(c));
}

} // namespace

TEST(MPoly, RingBasics)
{
    MPoly x = MPoly::variable("x"), y = MPoly::variable("y");
    MPoly s = (x + y).pow(2);
    EXPECT_EQ(s.str(), "x^2 + 2*x*y + y^2");
    EXPECT_EQ(s.coefficient_of(std::map<std::string, int>{{"x", 1}, {"y", 1}}), 2);
    EXPECT_EQ((MPoly::constant(1) + x).substitute("x", MPoly::constant(0)).str(), "1");
    EXPECT_THROW(s.substitute("w", x), std::invalid_argument);
    EXPECT_TRUE((s - s).is_zero());
    EXPECT_EQ(s.total_degree(), 2);
    EXPECT_EQ(s.degree_in("y"), 2);
}

TEST(MPoly, SubstituteIsSimultaneous)
{
    MPoly p = parse_mpoly("x^2*y + 3*y");
    MPoly swapped = p.substitute({{"x", MPoly::variable("y")}, {"y", MPoly::variable("x")}});
    EXPECT_EQ(swapped, parse_mpoly("y^2*x + 3*x"));
}

TEST(MPoly, SubstituteIsHomomorphism)
{
    Gen g;
    for (int t = 0; t < 50; ++t) {
        MPoly p = g.mpoly_ab(3), q = g.mpoly_ab(3);
        MPoly image = parse_mpoly("2*t - b + 1", {"a", "b", "t"});
        auto sub = [&](const MPoly& f) { return f.substitute("a", image); };
        EXPECT_EQ(sub(p * q), sub(p) * sub(q));
        EXPECT_EQ(sub(p + q), sub(p) + sub(q));
    }
}

TEST(MPoly, TruncatedProductMatchesFullProduct)
{
    Gen g;
    for (int t = 0; t < 50; ++t) {
        MPoly p = g.mpoly_ab(4), q = g.mpoly_ab(4);
        std::vector<DegreeCap> caps{{{"a"}, 3}, {{"a", "b"}, 5}};
        EXPECT_EQ(multiply_truncated(p, q, caps), (p * q).truncated(caps));
    }
}

TEST(MPoly, ExactDivision)
{
    MPoly p = parse_mpoly("x^3 - y^3");
    EXPECT_EQ(divide_exact(p, parse_mpoly("x - y")), parse_mpoly("x^2 + x*y + y^2"));
    EXPECT_THROW(divide_exact(parse_mpoly("x^2 + 1"), parse_mpoly("x - y")), std::domain_error);
}

TEST(Parse, ImplicitProductsAndKnownVariables)
{
    const std::vector<std::string> xy{"X", "Y"};
    EXPECT_EQ(parse_mpoly("5X^2+4XY+28X+Y^2+12Y+39", xy).str(), "5*X^2 + 4*X*Y + Y^2 + 28*X + 12*Y + 39");
    EXPECT_EQ(parse_mpoly("(T1^2-T1-2*T2)/2", {"T1", "T2"}).str(), "1/2*T1^2 - 1/2*T1 - T2");
    EXPECT_EQ(parse_mpoly("-(a-b)^2"), parse_mpoly("-a^2 + 2*a*b - b^2"));
    EXPECT_THROW(parse_mpoly("x +", {"x"}), std::invalid_argument);
    EXPECT_THROW(parse_mpoly("Z", {"X"}), std::invalid_argument);
}

TEST(Parse, RoundTripThroughStr)
{
    Gen g;
    for (int t = 0; t < 100; ++t) {
        MPoly p = g.mpoly_ab(4);
        EXPECT_EQ(parse_mpoly(p.str(), {"a", "b", "t"}), p) << p.str();
    }
}

TEST(DividedDifference, Examples)
{
    EXPECT_EQ(divided_difference(parse_mpoly("a^2")), parse_mpoly("-a - b"));
    EXPECT_TRUE(divided_difference(parse_mpoly("a*b")).is_zero());
    EXPECT_EQ(divided_difference(parse_mpoly("b")), MPoly::constant(1));
}

TEST(DividedDifference, ZeroIffSymmetric)
{
    Gen g;
    for (int t = 0; t < 100; ++t) {
        MPoly p = g.mpoly_ab(3);
        MPoly swapped = p.with_vars({"a", "b", "t"}).substitute({{"a", MPoly::variable("b")}, {"b", MPoly::variable("a")}});
        const bool symmetric = p == swapped;
        EXPECT_EQ(divided_difference(p).is_zero(), symmetric);
        // symmetrized input always maps to zero
        EXPECT_TRUE(divided_difference(p + swapped).is_zero());
    }
}

TEST(UPoly, Basics)
{
    UPoly t = UPoly::x();
    EXPECT_EQ(derivative(t.pow(3)), UPoly::monomial(2, 3));
    std::vector<std::pair<Rational, Rational>> pts{{0, 0}, {1, 1}, {2, 4}};
    EXPECT_EQ(interpolate(pts), t.pow(2));
    std::vector<std::pair<Rational, Rational>> dup{{0, 0}, {0, 1}};
    EXPECT_THROW(interpolate(dup), std::invalid_argument);
    EXPECT_EQ(UPoly().degree(), -1);
    EXPECT_EQ(UPoly::binomial_poly(2)(Rational(5)), 10);
    EXPECT_EQ(UPoly::binomial_poly(2, 3)(Rational(1)), 6);  // C(x+3, 2) at 1
}

TEST(UPoly, InterpolationRecoversRandomPolynomials)
{
    Gen g;
    for (int t = 0; t < 100; ++t) {
        UPoly p = g.upoly(10);
        std::vector<std::pair<Rational, Rational>> pts;
        for (long x = 0; x <= std::max<long>(p.degree(), 0); ++x)
            pts.emplace_back(Rational(x - 3), p(Rational(x - 3)));
        EXPECT_EQ(interpolate(pts), p);
    }
}

TEST(Discriminant, Values)
{
    EXPECT_EQ(discriminant(UPoly({Rational(-1), Rational(0), Rational(1)})), 4);
    EXPECT_EQ(discriminant(UPoly({Rational(402), Rational(188), Rational(27), Rational(1)})), -96548);
    EXPECT_EQ(discriminant(UPoly({Rational(134), Rational(319), Rational(304), Rational(130), Rational(20)})), -975021840);
    EXPECT_THROW(discriminant(UPoly()), std::invalid_argument);
    // b^2 - 4ac for random quadratics
    Gen g;
    for (int t = 0; t < 50; ++t) {
        Rational a = g.rational(), b = g.rational(), c = g.rational();
        if (a == 0)
            continue;
        EXPECT_EQ(discriminant(UPoly({c, b, a})), b * b - 4 * a * c);
    }
}

TEST(BinomialBasis, Examples)
{
    EXPECT_EQ(to_binomial_basis(UPoly::x().pow(2)), series({0, 1, 2}));
    EXPECT_EQ(to_binomial_basis(UPoly::constant(5)), series({5}));
    EXPECT_EQ(from_binomial_basis(series({0, 1, 2})), UPoly::x().pow(2));
    EXPECT_TRUE(from_binomial_basis(BinomialSeries()).is_zero());
    UPoly bitangent = UPoly::linear_root(-4) * UPoly::linear_root(-2) * UPoly::linear_root(-1) * UPoly::linear_root(-7) *
                      Rational(1, 2);
    EXPECT_EQ(from_binomial_basis(series({28, 92, 112, 60, 12})), bitangent);
}

TEST(BinomialBasis, RoundTrip)
{
    Gen g;
    for (int t = 0; t < 200; ++t) {
        UPoly p = g.upoly(12);
        BinomialSeries b = to_binomial_basis(p);
        EXPECT_LE(b.size(), static_cast<std::size_t>(std::max<long>(p.degree(), -1) + 1));
        EXPECT_EQ(from_binomial_basis(b), p);
        for (int x = -2; x <= 4; ++x)
            EXPECT_EQ(b(Rational(x)), p(Rational(x)));
    }
}

TEST(TAlpha, Examples)
{
    EXPECT_EQ(t_alpha(series({1}), 0), series({0, 1}));
    EXPECT_EQ(t_alpha(series({0, 1}), -1), series({0, 2, 2}));
    EXPECT_EQ(t_alpha(series({0, 1}), 1), series({0, 0, 2}));
}

TEST(TAlpha, MatchesMultiplication)
{
    Gen g;
    for (int t = 0; t < 200; ++t) {
        UPoly f = g.upoly(8);
        const int alpha = g.uniform(-6, 6);
        BinomialSeries direct = to_binomial_basis(UPoly::linear_root(alpha) * f);
        EXPECT_EQ(t_alpha(to_binomial_basis(f), alpha), direct);
    }
}

TEST(BinomialShift, Examples)
{
    auto a = binomial_shift(series({0, 0, 1}), 2);
    EXPECT_TRUE(a.precondition_ok);
    EXPECT_EQ(a.series, series({0, 0, 0, 3}));
    auto b = binomial_shift(series({0, 1}), 0);
    EXPECT_EQ(b.series, series({0, 1, 2}));
    EXPECT_TRUE(b.nonnegative);
    auto c = binomial_shift(series({1}), 1);
    EXPECT_FALSE(c.precondition_ok);
    EXPECT_FALSE(c.message.empty());
}

TEST(BinomialShift, RandomValidInputsStayNonnegative)
{
    Gen g;
    for (int t = 0; t < 200; ++t) {
        const int start = g.uniform(0, 6);
        std::vector<Rational> c(static_cast<std::size_t>(start), Rational(0));
        for (int i = 0, n = g.uniform(1, 7); i < n; ++i)
            c.push_back(make_rational(g.uniform(i == 0 ? 1 : 0, 30), g.uniform(1, 5)));
        BinomialSeries a(c);
        const int shift = g.uniform(-4, start);
        ShiftCertificate cert = binomial_shift(a, shift);
        ASSERT_TRUE(cert.precondition_ok);
        EXPECT_TRUE(cert.nonnegative) << a.str() << " c=" << shift;
        EXPECT_TRUE(cert.message.empty()) << cert.message;
        ASSERT_TRUE(cert.output_min_support);
        EXPECT_GE(static_cast<long>(*cert.output_min_support), std::max<long>(start, shift + 1));
    }
}
