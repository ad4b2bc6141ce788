#pragma once

// Named verification suites. Each suite compares derived values against
// independently computed or transcribed references and returns a report
// together with display rows.

#include "symchern/appendix.hpp"
#include "symchern/chern.hpp"
#include "symchern/ktheory.hpp"
#include "symchern/parse.hpp"
#include "symchern/plucker.hpp"
#include "symchern/ranktwo.hpp"
#include "symchern/report.hpp"

#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace symchern {

using Field = std::variant<long, std::string>;
using Row = std::vector<std::pair<std::string, Field>>;

struct SuiteResult {
    VerificationReport report;
    std::vector<Row> rows;
};

struct SuiteOptions {
    int kmax = 20;
    int jmax = -1;  // -1: the established range of the conjecture
    int workers = 1;
};

inline SuiteResult appendix_suite()
{
    AppendixResult res = appendix_pipeline();
    SuiteResult out{res.report, {}};
    for (const auto& e : res.entries)
        out.rows.push_back({{"S", long{e.S}},
                            {"i", long{e.i}},
                            {"pair", "(" + std::to_string(e.m) + "," + std::to_string(e.M) + ")"},
                            {"W", e.w_xy.str()},
                            {"matches", std::string(e.matches ? "yes" : "no")},
                            {"nonnegative", std::string(e.nonnegative ? "yes" : "no")}});
    return out;
}

inline SuiteResult a12_suite(int kmin = 3, int kmax = 12)
{
    Stopwatch sw;
    SuiteResult out;
    out.report.target = "a12-identity";
    out.report.range = std::to_string(kmin) + "<=k<=" + std::to_string(kmax);
    for (int k = kmin; k <= kmax; ++k) {
        VerificationReport r = verify_a12_identity(k);
        out.rows.push_back({{"k", long{k}}, {"status", status_name(r.status)}});
        out.report.merge(r);
    }
    out.report.elapsed_ms = sw.ms();
    return out;
}

namespace detail {

// Printed Schur coefficients of c_1, c_2, c_3 at d = 2 as functions of n.
inline Rational d2_reference(const Partition& l, const Rational& n)
{
    const std::string s = l.str();
    if (s == "[1]")
        return n + 1;
    if (s == "[2]")
        return (n - 1) * (n + 2) / 2;
    if (s == "[1,1]")
        return (n + 1) * (n + 2) / 2;
    if (s == "[3]")
        return (n - 2) * (n - 1) * (n + 3) / 6;
    if (s == "[2,1]")
        return (n + 2) * (n * n + n - 3) / 3;
    if (s == "[1,1,1]")
        return (n + 1) * (n + 2) * (n + 3) / 6;
    throw std::invalid_argument("no printed d=2 coefficient for " + s);
}

} // namespace detail

inline SuiteResult d2_suite(int printed_nmax = 6, int oracle_nmax = 4, int oracle_kmax = 4)
{
    Stopwatch sw;
    SuiteResult out;
    auto& rep = out.report;
    rep.target = "d2-determinant";
    rep.range = "printed rows 2<=n<=" + std::to_string(printed_nmax) + "; oracle n<=" + std::to_string(oracle_nmax) +
                ", k<=" + std::to_string(oracle_kmax);
    for (int n = 2; n <= printed_nmax; ++n)
        for (int k = 1; k <= 3; ++k)
            for (const auto& l : partitions_of(k, n)) {
                const Rational got = d2_schur_coeff(l, n);
                const Rational want = detail::d2_reference(l, Rational(n));
                const std::string where = "n=" + std::to_string(n) + " lambda=" + l.str();
                if (got != want)
                    rep.fail(where, "determinant " + to_string(got) + ", printed " + to_string(want));
                out.rows.push_back({{"n", long{n}}, {"lambda", l.str()}, {"value", to_string(got)}, {"source", std::string("printed")}});
            }
    for (int n = 2; n <= oracle_nmax; ++n) {
        auto classes = chern_oracle(n, 2, oracle_kmax);
        for (int k = 1; k <= oracle_kmax; ++k) {
            SymFunc s = convert_basis(classes[static_cast<std::size_t>(k)].value, Basis::s);
            for (const auto& l : partitions_of(k, n)) {
                const Rational got = d2_schur_coeff(l, n);
                const Rational want = s.coefficient(l);
                const std::string where = "n=" + std::to_string(n) + " lambda=" + l.str();
                if (got != want)
                    rep.fail(where, "determinant " + to_string(got) + ", oracle " + to_string(want));
                out.rows.push_back({{"n", long{n}}, {"lambda", l.str()}, {"value", to_string(got)}, {"source", std::string("oracle")}});
            }
        }
    }
    rep.elapsed_ms = sw.ms();
    return out;
}

inline SuiteResult euler_suite(int dmax = 7)
{
    Stopwatch sw;
    SuiteResult out;
    auto& rep = out.report;
    rep.target = "euler-rank2";
    rep.range = "1<=d<=" + std::to_string(dmax);
    for (int d = 1; d <= dmax; ++d) {
        SymFunc top = chern_class(2, d, d + 1, Basis::s);
        SymFunc closed(Basis::s, 2);
        for (int b = 0; 2 * b <= d + 1; ++b) {
            const Integer g = euler_gamma_rank2(d, b);
            closed.add(Partition{d + 1 - b, b}, Rational(g));
            out.rows.push_back({{"d", long{d}}, {"b", long{b}}, {"gamma", to_string(g)}});
        }
        if (!(closed == top))
            rep.fail("d=" + std::to_string(d), "closed " + closed.str() + ", oracle " + top.str());
    }
    rep.elapsed_ms = sw.ms();
    return out;
}

namespace detail {

struct NNReference {
    int q, m;
    std::vector<std::pair<Partition, std::string>> terms;  // e-basis, T coefficients
};

inline const std::vector<NNReference>& nn_small_reference()
{
    static const std::vector<NNReference> ref{
        {1, 1, {{Partition{1}, "T1"}}},
        {1, 2, {{Partition{1, 1}, "-T2"}, {Partition{2}, "T2"}}},
        {2, 2, {{Partition{1, 1}, "(T1^2-T1-2*T2)/2"}, {Partition{2}, "T1+T2"}}},
        {1, 3, {{Partition{1, 1, 1}, "T3"}, {Partition{2, 1}, "-2*T3"}, {Partition{3}, "T3"}}},
        {2, 3, {{Partition{1, 1, 1}, "3*T3+2*T2-T1*T2"}, {Partition{2, 1}, "T1*T2-6*T3-5*T2"}, {Partition{3}, "3*T3+3*T2"}}},
        {3, 3,
         {{Partition{1, 1, 1}, "(T1^3-3*T1^2-6*T1*T2+12*T3+12*T2+2*T1)/6"},
          {Partition{2, 1}, "T1^2+T1*T2-4*T3-5*T2-T1"},
          {Partition{3}, "2*T3+3*T2+T1"}}},
    };
    return ref;
}

} // namespace detail

// The six printed NN coefficients, diagonal recovery against the Chern oracle
// and the vanishing law on the (n,d) grid {2,3} x {1,2,3}.
inline SuiteResult nn_small_suite()
{
    Stopwatch sw;
    SuiteResult out;
    auto& rep = out.report;
    rep.target = "nn-small";
    rep.range = "printed q<=m<=3; grid n in {2,3}, d in {1,2,3}, m<=3";
    const auto tv = t_vars(3);
    for (const auto& ref : detail::nn_small_reference()) {
        TSymFunc want(Basis::e, 3);
        for (const auto& [l, text] : ref.terms)
            want.add(l, parse_mpoly(text, tv));
        TSymFunc got = nn_symbolic_T(ref.q, ref.m);
        bool same = got.coords.size() == want.coords.size();
        for (const auto& [l, c] : want.coords)
            same = same && got.coefficient(l) == c;
        const std::string where = "q=" + std::to_string(ref.q) + " m=" + std::to_string(ref.m);
        if (!same)
            rep.fail(where, "derived " + got.str() + ", printed " + want.str());
        out.rows.push_back({{"q", long{ref.q}}, {"m", long{ref.m}}, {"value", got.str()}, {"matches", std::string(same ? "yes" : "no")}});
    }
    for (int n = 2; n <= 3; ++n)
        for (int d = 1; d <= 3; ++d) {
            const std::string nd = "n=" + std::to_string(n) + " d=" + std::to_string(d);
            NNExpansion nn = nn_truncated(n, d, 4, 3);
            if (!nn.vanishing_law_holds())
                rep.fail(nd, "a coefficient with q > m is nonzero");
            auto classes = chern_oracle(n, d, 3);
            std::map<std::string, std::string> rename;
            for (int i = 1; i <= n; ++i)
                rename["u" + std::to_string(i)] = "x" + std::to_string(i);
            for (int m = 0; m <= 3; ++m)
                for (int q = 0; q <= m; ++q) {
                    MPoly c = nn.coefficient(q, m).with_vars(u_vars(n)).rename(rename);
                    SymFunc direct = convert_basis(collect_symmetric(c, n), Basis::e);
                    SymFunc universal = specialize(nn_symbolic_T(q, m), n, d);
                    const std::string where = nd + " q=" + std::to_string(q) + " m=" + std::to_string(m);
                    if (!(direct == universal))
                        rep.fail(where, "expansion " + direct.str() + ", universal " + universal.str());
                    if (q == m) {
                        SymFunc ck = convert_basis(classes[static_cast<std::size_t>(m)].value, Basis::e);
                        if (!(direct == ck))
                            rep.fail(where, "diagonal " + direct.str() + ", c_k " + ck.str());
                    }
                }
        }
    rep.elapsed_ms = sw.ms();
    return out;
}

inline SuiteResult conjecture_suite(char which, const SuiteOptions& opt)
{
    const int jmax = opt.jmax >= 0 ? opt.jmax : (which == 'A' ? 2 : 1);
    VerificationReport rep = which == 'A' ? check_conjecture_A(opt.kmax, jmax, opt.workers)
                                          : check_conjecture_B(opt.kmax, jmax, opt.workers);
    SuiteResult out{rep, {}};
    for (const auto& [k, j] : detail::scan_cells(opt.kmax, jmax))
        out.rows.push_back({{"k", long{k}}, {"j", long{j}}, {"B", row(k, j).B.str()}});
    return out;
}

inline SuiteResult plucker_vectors_suite()
{
    Stopwatch sw;
    SuiteResult out;
    auto& rep = out.report;
    rep.target = "plucker-vectors";
    rep.range = "builtin vectors, (3,3) discriminants, flex, top coefficients with parts in {2,3,4}, length<=3";
    auto add_row = [&](const PluckerDatum& v, Status s) {
        out.rows.push_back({{"label", v.label},
                            {"lambda", v.lambda.str()},
                            {"i", long{v.i}},
                            {"pl_index", long{v.pl_index}},
                            {"C", v.C.str()},
                            {"status", status_name(s)}});
    };
    for (const auto& v : builtin_vectors()) {
        VerificationReport r = check_shifted_conjectures(v);
        add_row(v, r.status);
        rep.merge(r);
    }

    const Integer disc3 = to_integer(discriminant(plucker_33_cubic()));
    const Integer disc4 = to_integer(discriminant(plucker_33_quartic()));
    if (disc3 != -96548)
        rep.fail("cubic discriminant", to_string(disc3));
    if (disc4 != -975021840)
        rep.fail("quartic discriminant", to_string(disc4));
    // sum_r C_r z^r = 18 (z+1)^2 (quartic)
    for (const auto& v : builtin_vectors())
        if (v.lambda == Partition{3, 3}) {
            UPoly gen(v.C.coeffs());
            UPoly factored = UPoly::constant(18) * UPoly::linear_root(-1).pow(2) * plucker_33_quartic();
            if (!(gen == factored))
                rep.fail("(3,3) generating polynomial", gen.str("z"));
        }
    out.rows.push_back({{"label", std::string("cubic discriminant")}, {"value", to_string(disc3)}});
    out.rows.push_back({{"label", std::string("quartic discriminant")}, {"value", to_string(disc4)}});

    const PluckerDatum flex = flex_datum();
    const BinomialSeries unshifted = to_binomial_basis(flex.P);
    if (unshifted[1] != -3)
        rep.fail("flex unshifted", unshifted.str());
    if (!(flex.C == BinomialSeries{Rational(9), Rational(15), Rational(6)}) || !flex.C.nonnegative())
        rep.fail("flex shifted", flex.C.str());
    out.rows.push_back({{"label", std::string("flex unshifted")}, {"C", unshifted.str()}});
    add_row(flex, check_shifted_conjectures(flex).status);

    std::function<void(std::vector<int>&)> tops = [&](std::vector<int>& parts) {
        if (!parts.empty()) {
            Partition l(parts);
            PluckerDatum t = top_plucker(l);
            VerificationReport r = check_shifted_conjectures(t);
            if (!(t.C == top_plucker_closed(l)))
                r.fail(l.str(), "top coefficients " + t.C.str() + ", closed " + top_plucker_closed(l).str());
            rep.merge(r);
        }
        if (parts.size() == 3)
            return;
        for (int p = parts.empty() ? 4 : parts.back(); p >= 2; --p) {
            parts.push_back(p);
            tops(parts);
            parts.pop_back();
        }
    };
    std::vector<int> parts;
    tops(parts);
    rep.elapsed_ms = sw.ms();
    return out;
}

inline SuiteResult leading_suite(int max_size = 3)
{
    Stopwatch sw;
    SuiteResult out;
    auto& rep = out.report;
    rep.target = "leading-term";
    rep.range = "1<=|lambda|<=" + std::to_string(max_size) + ", d in {2,3}";
    for (int k = 1; k <= max_size; ++k)
        for (const auto& l : partitions_of(k))
            for (int d : {2, 3}) {
                VerificationReport r = leading_term_check(l, d);
                out.rows.push_back({{"lambda", l.str()}, {"d", long{d}}, {"status", status_name(r.status)}});
                rep.merge(r);
            }
    rep.elapsed_ms = sw.ms();
    return out;
}

inline const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"appendix", "a12",   "d2",   "euler",           "nn-small",
                                                "conjA",    "conjB", "plucker-vectors", "leading"};
    return names;
}

inline SuiteResult run_suite(const std::string& name, const SuiteOptions& opt = {})
{
    if (name == "appendix")
        return appendix_suite();
    if (name == "a12")
        return a12_suite();
    if (name == "d2")
        return d2_suite();
    if (name == "euler")
        return euler_suite();
    if (name == "nn-small")
        return nn_small_suite();
    if (name == "conjA")
        return conjecture_suite('A', opt);
    if (name == "conjB")
        return conjecture_suite('B', opt);
    if (name == "plucker-vectors")
        return plucker_vectors_suite();
    if (name == "leading")
        return leading_suite();
    if (name == "all") {
        Stopwatch sw;
        SuiteResult out;
        out.report.target = "all";
        out.report.range = "every suite";
        for (const auto& n : suite_names()) {
            SuiteResult r = run_suite(n, opt);
            out.rows.push_back({{"suite", n}, {"status", status_name(r.report.status)}, {"range", r.report.range}});
            out.report.merge(r.report);
        }
        out.report.elapsed_ms = sw.ms();
        return out;
    }
    throw std::invalid_argument("unknown suite '" + name + "'");
}

} // namespace symchern
