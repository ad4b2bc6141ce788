#pragma once

// Prefix-sum certificate for log-concavity of (B_{k,1,r})_r. With
// D_i = D(r+i, k-1), B_{k,1,r+s} is linear in D_{s-2..s+1}, so
// L_{k,r} = B_{k,1,r}^2 - B_{k,1,r-1} B_{k,1,r+1} is a quadratic form in
// D_{-3..2}. Its terms are grouped by trace a+b, summed by parts along a
// fixed pair order, and each prefix sum is rewritten in X = r+m-k and
// Y = 2k-2-(r+M).

#include "symchern/mpoly.hpp"
#include "symchern/parse.hpp"
#include "symchern/ranktwo.hpp"
#include "symchern/report.hpp"

#include <string>
#include <utility>
#include <vector>

namespace symchern {

struct AppendixEntry {
    int S = 0, i = 0;
    int m = 0, M = 0;
    MPoly w_kr;      // prefix sum in k, r
    MPoly w_xy;      // after the substitution
    std::string expected;
    bool matches = false;
    bool nonnegative = false;
};

struct AppendixResult {
    VerificationReport report;
    std::vector<AppendixEntry> entries;
};

// Pair orders on each trace slice, center outward.
inline const std::vector<std::pair<int, std::vector<std::pair<int, int>>>>& appendix_slices()
{
    static const std::vector<std::pair<int, std::vector<std::pair<int, int>>>> slices{
        {-4, {{-2, -2}, {-3, -1}}},
        {-3, {{-2, -1}, {-3, 0}}},
        {-2, {{-1, -1}, {-2, 0}, {-3, 1}}},
        {-1, {{-1, 0}, {-2, 1}, {-3, 2}}},
        {0, {{0, 0}, {-1, 1}, {-2, 2}}},
        {1, {{0, 1}, {-1, 2}}},
        {2, {{1, 1}, {0, 2}}},
    };
    return slices;
}

// Reference prefix-sum polynomials W_{S,i}(X,Y), keyed by (S, i).
inline const std::vector<std::pair<std::pair<int, int>, std::string>>& appendix_reference()
{
    static const std::vector<std::pair<std::pair<int, int>, std::string>> ref{
        {{-4, 0}, "4X^4+4X^3Y+20X^3+X^2Y^2+14X^2Y+37X^2+2XY^2+16XY+30X+Y^2+6Y+9"},
        {{-4, 1}, "5X^2+4XY+28X+Y^2+12Y+39"},
        {{-3, 0}, "12X^4+12X^3Y+84X^3+3X^2Y^2+58X^2Y+221X^2+8XY^2+94XY+258X+6Y^2+52Y+112"},
        {{-3, 1}, "30X^2+24XY+204X+6Y^2+88Y+344"},
        {{-2, 0}, "24X^4+24X^3Y+94X^3+6X^2Y^2+61X^2Y+140X^2+7XY^2+51XY+94X+2Y^2+14Y+24"},
        {{-2, 1}, "12X^4+12X^3Y+110X^3+3X^2Y^2+77X^2Y+401X^2+11XY^2+181XY+696X+15Y^2+168Y+481"},
        {{-2, 2}, "75X^2+60XY+598X+15Y^2+258Y+1187"},
        {{-1, 0}, "32X^4+32X^3Y+196X^3+8X^2Y^2+134X^2Y+442X^2+18XY^2+174XY+432X+8Y^2+68Y+152"},
        {{-1, 1}, "4X^4+4X^3Y+46X^3+X^2Y^2+33X^2Y+270X^2+5XY^2+145XY+832X+20Y^2+272Y+976"},
        {{-1, 2}, "100X^2+80XY+912X+20Y^2+392Y+2080"},
        {{0, 0}, "24X^4+24X^3Y+78X^3+6X^2Y^2+53X^2Y+94X^2+7XY^2+37XY+50X+2Y^2+8Y+10"},
        {{0, 1}, "12X^4+12X^3Y+102X^3+3X^2Y^2+73X^2Y+339X^2+11XY^2+151XY+522X+11Y^2+112Y+309"},
        {{0, 2}, "75X^2+60XY+558X+15Y^2+238Y+1027"},
        {{1, 0}, "12X^4+12X^3Y+68X^3+3X^2Y^2+50X^2Y+138X^2+8XY^2+60XY+116X+3Y^2+18Y+32"},
        {{1, 1}, "30X^2+24XY+172X+6Y^2+72Y+240"},
        {{2, 0}, "4X^4+4X^3Y+12X^3+X^2Y^2+10X^2Y+13X^2+2XY^2+8XY+6X+Y^2+2Y+1"},
        {{2, 1}, "5X^2+4XY+20X+Y^2+8Y+19"},
    };
    return ref;
}

inline std::string d_var(int i) { return i < 0 ? "Dm" + std::to_string(-i) : "D" + std::to_string(i); }

// B_{k,1,r+s} = p_1(k,r+s) D_{s+1} + p_0 D_s + p_{-1} D_{s-1} + p_{-2} D_{s-2}.
inline MPoly appendix_b1_form(int s)
{
    const std::vector<std::string> kr{"k", "r"};
    const MPoly k = MPoly::variable(kr, "k");
    const MPoly r = MPoly::variable(kr, "r") + MPoly::constant(kr, s);
    const MPoly one = MPoly::constant(kr, 1);
    const MPoly p1 = r * (r + 2 * one - k);
    const MPoly p0 = r * (3 * r + 2 * one - 3 * k);
    const MPoly pm1 = 3 * r * r - 3 * k * r - 2 * r + k + one;
    const MPoly pm2 = (r - one) * (r - k - one);
    return p1 * MPoly::variable(d_var(s + 1)) + p0 * MPoly::variable(d_var(s)) +
           pm1 * MPoly::variable(d_var(s - 1)) + pm2 * MPoly::variable(d_var(s - 2));
}

inline MPoly appendix_quadratic_form()
{
    return appendix_b1_form(0) * appendix_b1_form(0) - appendix_b1_form(-1) * appendix_b1_form(1);
}

// Coefficient of D_a D_b in a quadratic form in the D variables, as a
// polynomial in k and r.
inline MPoly appendix_pair_coefficient(const MPoly& L, int a, int b)
{
    std::map<std::string, int> powers;
    for (int i = -3; i <= 2; ++i)
        powers[d_var(i)] = 0;
    powers[d_var(a)] += 1;
    powers[d_var(b)] += 1;
    return L.coefficient(powers).compact();
}

inline AppendixResult appendix_pipeline()
{
    Stopwatch sw;
    AppendixResult out;
    auto& rep = out.report;
    rep.target = "appendix-prefix-sums";
    rep.range = "trace slices S=-4..2";
    const std::vector<std::string> xy{"X", "Y"};
    const std::vector<std::string> kr{"k", "r"};

    const MPoly L = appendix_quadratic_form();

    // Every monomial of L must be a product of two D's from the window.
    for (const auto& [e, c] : L.terms()) {
        int ddeg = 0;
        for (std::size_t v = 0; v < e.size(); ++v)
            if (L.vars()[v][0] == 'D')
                ddeg += e[v];
        if (ddeg != 2)
            rep.fail("quadratic form", "term of D-degree " + std::to_string(ddeg));
    }

    MPoly abel(L.vars());  // sum over slices of W_{S,i} (U_i - U_{i+1})
    for (const auto& [S, pairs] : appendix_slices()) {
        MPoly prefix(kr);
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            const auto [m, M] = pairs[i];
            prefix += appendix_pair_coefficient(L, m, M);
            const MPoly X = MPoly::variable(xy, "X"), Y = MPoly::variable(xy, "Y");
            const MPoly one = MPoly::constant(xy, 1);
            MPoly w = prefix.with_vars(kr).substitute({
                {"k", X + Y + Rational(M - m + 2) * one},
                {"r", Rational(2) * X + Y + Rational(M - 2 * m + 2) * one},
            });
            AppendixEntry entry{S, static_cast<int>(i), m, M, prefix, w, "", false, w.all_coefficients_nonnegative()};
            for (const auto& [key, text] : appendix_reference())
                if (key == std::pair{S, static_cast<int>(i)})
                    entry.expected = text;
            entry.matches = !entry.expected.empty() && parse_mpoly(entry.expected, xy) == w;
            const std::string where = "S=" + std::to_string(S) + " i=" + std::to_string(i);
            if (!entry.matches)
                rep.fail(where, "derived " + w.str() + ", reference " + entry.expected);
            if (!entry.nonnegative)
                rep.fail(where, "negative coefficient in " + w.str());

            MPoly u = MPoly::variable(d_var(m)) * MPoly::variable(d_var(M));
            MPoly next = i + 1 < pairs.size()
                             ? MPoly::variable(d_var(pairs[i + 1].first)) * MPoly::variable(d_var(pairs[i + 1].second))
                             : MPoly();
            abel += prefix * (u - next);
            out.entries.push_back(std::move(entry));
        }
    }
    if (!(abel == L))
        rep.fail("Abel summation", "prefix-sum decomposition does not reproduce the quadratic form");
    if (out.entries.size() != appendix_reference().size())
        rep.fail("count", std::to_string(out.entries.size()) + " prefix sums");

    // The encoding evaluates to B^2 - B B on actual rows.
    for (int k = 2; k <= 8; ++k)
        for (int r = 0; r <= 2 * k + 1; ++r) {
            std::map<std::string, Rational> pt{{"k", Rational(k)}, {"r", Rational(r)}};
            for (int i = -3; i <= 2; ++i)
                pt[d_var(i)] = Rational(defect_derangements(r + i, k - 1));
            const Integer direct = b1_closed(k, r) * b1_closed(k, r) - b1_closed(k, r - 1) * b1_closed(k, r + 1);
            if (L.evaluate(pt) != Rational(direct))
                rep.fail("k=" + std::to_string(k) + " r=" + std::to_string(r), "quadratic form disagrees with rows");
        }
    rep.elapsed_ms = sw.ms();
    return out;
}

} // namespace symchern
