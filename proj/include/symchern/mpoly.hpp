#pragma once

#include "symchern/exact.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace symchern {

using Exponent = std::vector<int>;

// Caps the combined degree in a group of variables during truncated products.
struct DegreeCap {
    std::vector<std::string> vars;
    int max;
};

// Sparse multivariate polynomial over Rational in an ordered list of named
// variables. Exponent vectors are dense with one slot per variable; terms are
// keyed in lexicographic order, so the last key is the lex-leading term.
// Zero coefficients are never stored.
class MPoly {
public:
    using Terms = std::map<Exponent, Rational>;

    MPoly() = default;
    explicit MPoly(std::vector<std::string> vars) : vars_(std::move(vars)) { check_vars(); }

    static MPoly constant(std::vector<std::string> vars, const Rational& c)
    {
        MPoly p(std::move(vars));
        if (c != 0)
            p.terms_[Exponent(p.vars_.size(), 0)] = c;
        return p;
    }
    static MPoly constant(const Rational& c) { return constant({}, c); }

    static MPoly variable(std::vector<std::string> vars, const std::string& name)
    {
        MPoly p(std::move(vars));
        Exponent e(p.vars_.size(), 0);
        e[p.index_of(name)] = 1;
        p.terms_[e] = 1;
        return p;
    }
    static MPoly variable(const std::string& name) { return variable({name}, name); }

    static MPoly monomial(std::vector<std::string> vars, Exponent e, const Rational& c = 1)
    {
        MPoly p(std::move(vars));
        if (e.size() != p.vars_.size())
            throw std::invalid_argument("monomial: exponent length does not match variables");
        for (int v : e)
            if (v < 0)
                throw std::invalid_argument("monomial: negative exponent");
        if (c != 0)
            p.terms_[std::move(e)] = c;
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const Terms& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    bool has_var(const std::string& name) const
    {
        return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
    }
    std::size_t index_of(const std::string& name) const
    {
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end())
            throw std::invalid_argument("unknown variable '" + name + "'");
        return static_cast<std::size_t>(it - vars_.begin());
    }

    bool is_constant() const
    {
        return terms_.empty() || (terms_.size() == 1 && is_zero_exponent(terms_.begin()->first));
    }
    Rational constant_term() const { return coefficient_of(Exponent(vars_.size(), 0)); }

    int degree_in(const std::string& name) const
    {
        if (!has_var(name))
            return terms_.empty() ? -1 : 0;
        const std::size_t i = index_of(name);
        int d = -1;
        for (const auto& [e, c] : terms_)
            d = std::max(d, e[i]);
        return d;
    }

    int total_degree() const
    {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int v : e)
                s += v;
            d = std::max(d, s);
        }
        return d;
    }

    Rational coefficient_of(const Exponent& e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational coefficient_of(const std::map<std::string, int>& powers) const
    {
        Exponent e(vars_.size(), 0);
        for (const auto& [name, p] : powers) {
            if (!has_var(name)) {
                if (p != 0)
                    return 0;
                continue;
            }
            e[index_of(name)] = p;
        }
        return coefficient_of(e);
    }

    // Coefficient of prod name^power over the listed variables, as a
    // polynomial in the remaining variables.
    MPoly coefficient(const std::map<std::string, int>& powers) const
    {
        std::vector<std::size_t> fixed;
        std::vector<int> want;
        for (const auto& [name, p] : powers) {
            if (!has_var(name)) {
                if (p != 0)
                    return MPoly(remaining_vars(powers));
                continue;
            }
            fixed.push_back(index_of(name));
            want.push_back(p);
        }
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (std::find(fixed.begin(), fixed.end(), i) == fixed.end())
                keep.push_back(i);
        MPoly out(remaining_vars(powers));
        for (const auto& [e, c] : terms_) {
            bool match = true;
            for (std::size_t j = 0; j < fixed.size() && match; ++j)
                match = e[fixed[j]] == want[j];
            if (!match)
                continue;
            Exponent f;
            f.reserve(keep.size());
            for (std::size_t i : keep)
                f.push_back(e[i]);
            out.terms_[std::move(f)] += c;
        }
        return out;
    }

    // Re-embeds into a new variable list; every variable in use must survive.
    MPoly with_vars(const std::vector<std::string>& new_vars) const
    {
        if (new_vars == vars_)
            return *this;
        MPoly out(new_vars);
        std::vector<std::size_t> map(vars_.size());
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            auto it = std::find(new_vars.begin(), new_vars.end(), vars_[i]);
            if (it == new_vars.end()) {
                if (degree_in(vars_[i]) > 0)
                    throw std::invalid_argument("with_vars: dropping variable '" + vars_[i] + "' in use");
                map[i] = new_vars.size();
            } else {
                map[i] = static_cast<std::size_t>(it - new_vars.begin());
            }
        }
        for (const auto& [e, c] : terms_) {
            Exponent f(new_vars.size(), 0);
            for (std::size_t i = 0; i < e.size(); ++i)
                if (map[i] < new_vars.size())
                    f[map[i]] = e[i];
            out.terms_.emplace(std::move(f), c);
        }
        return out;
    }

    // Drops variables that appear in no term.
    MPoly compact() const
    {
        std::vector<std::string> used;
        for (const auto& v : vars_)
            if (degree_in(v) > 0)
                used.push_back(v);
        return with_vars(used);
    }

    MPoly rename(const std::map<std::string, std::string>& names) const
    {
        MPoly out = *this;
        for (auto& v : out.vars_) {
            auto it = names.find(v);
            if (it != names.end())
                v = it->second;
        }
        out.check_vars();
        return out;
    }

    MPoly& operator+=(const MPoly& o) { return accumulate(o, Rational(1)); }
    MPoly& operator-=(const MPoly& o) { return accumulate(o, Rational(-1)); }
    MPoly& operator*=(const MPoly& o)
    {
        *this = *this * o;
        return *this;
    }
    MPoly& operator*=(const Rational& s)
    {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_)
            c *= s;
        return *this;
    }

    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator-(MPoly a) { return a *= Rational(-1); }
    friend MPoly operator*(MPoly a, const Rational& s) { return a *= s; }
    friend MPoly operator*(const Rational& s, MPoly a) { return a *= s; }
    friend MPoly operator*(const MPoly& a, const MPoly& b) { return multiply_truncated(a, b, {}); }

    friend bool operator==(const MPoly& a, const MPoly& b)
    {
        if (a.vars_ == b.vars_)
            return a.terms_ == b.terms_;
        auto vars = union_vars(a.vars_, b.vars_);
        return a.with_vars(vars).terms_ == b.with_vars(vars).terms_;
    }

    MPoly pow(unsigned e) const
    {
        MPoly r = constant(vars_, 1), b = *this;
        while (e) {
            if (e & 1)
                r *= b;
            e >>= 1;
            if (e)
                b *= b;
        }
        return r;
    }

    // Simultaneous substitution of variables by polynomials (a ring
    // homomorphism). Substituted variables leave the variable list unless
    // they reappear in a replacement.
    MPoly substitute(const std::map<std::string, MPoly>& values) const
    {
        for (const auto& [name, v] : values)
            if (!has_var(name))
                throw std::invalid_argument("substitute: unknown variable '" + name + "'");
        std::vector<std::string> out_vars;
        for (const auto& v : vars_)
            if (!values.count(v))
                out_vars.push_back(v);
        for (const auto& [name, v] : values)
            out_vars = union_vars(out_vars, v.vars_);

        std::vector<std::size_t> sub_index;
        std::vector<const MPoly*> sub_value;
        std::vector<std::size_t> keep_index;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            auto it = values.find(vars_[i]);
            if (it != values.end()) {
                sub_index.push_back(i);
                sub_value.push_back(&it->second);
            } else {
                keep_index.push_back(i);
            }
        }
        // powers[j][p] = value_j^p in out_vars
        std::vector<std::vector<MPoly>> powers(sub_index.size());
        for (std::size_t j = 0; j < sub_index.size(); ++j) {
            int maxp = degree_in(vars_[sub_index[j]]);
            powers[j].push_back(constant(out_vars, 1));
            MPoly base = sub_value[j]->with_vars(out_vars);
            for (int p = 1; p <= maxp; ++p)
                powers[j].push_back(powers[j].back() * base);
        }
        std::vector<std::size_t> keep_target;
        for (std::size_t i : keep_index)
            keep_target.push_back(static_cast<std::size_t>(
                std::find(out_vars.begin(), out_vars.end(), vars_[i]) - out_vars.begin()));

        MPoly out(out_vars);
        for (const auto& [e, c] : terms_) {
            Exponent f(out_vars.size(), 0);
            for (std::size_t j = 0; j < keep_index.size(); ++j)
                f[keep_target[j]] = e[keep_index[j]];
            MPoly term = monomial(out_vars, std::move(f), c);
            for (std::size_t j = 0; j < sub_index.size(); ++j)
                if (e[sub_index[j]])
                    term *= powers[j][static_cast<std::size_t>(e[sub_index[j]])];
            out += term;
        }
        return out;
    }

    MPoly substitute(const std::string& name, const MPoly& value) const { return substitute({{name, value}}); }

    // Full evaluation; every variable occurring in a term must be assigned.
    Rational evaluate(const std::map<std::string, Rational>& point) const
    {
        std::vector<const Rational*> vals(vars_.size(), nullptr);
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            auto it = point.find(vars_[i]);
            if (it != point.end())
                vals[i] = &it->second;
        }
        Rational acc = 0;
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (!e[i])
                    continue;
                if (!vals[i])
                    throw std::invalid_argument("evaluate: variable '" + vars_[i] + "' not assigned");
                t *= symchern::pow(*vals[i], static_cast<unsigned long>(e[i]));
            }
            acc += t;
        }
        return acc;
    }

    // Keeps only the terms satisfying every cap.
    MPoly truncated(const std::vector<DegreeCap>& caps) const
    {
        auto resolved = resolve_caps(vars_, caps);
        MPoly out(vars_);
        for (const auto& [e, c] : terms_)
            if (within(e, resolved))
                out.terms_.emplace(e, c);
        return out;
    }

    bool all_coefficients_nonnegative() const
    {
        for (const auto& [e, c] : terms_)
            if (c < 0)
                return false;
        return true;
    }

    // Graded rendering, highest total degree first.
    std::string str() const;

    friend MPoly multiply_truncated(const MPoly& a, const MPoly& b, const std::vector<DegreeCap>& caps);
    friend MPoly divide_exact(const MPoly& a, const MPoly& b);

    static std::vector<std::string> union_vars(const std::vector<std::string>& a, const std::vector<std::string>& b)
    {
        std::vector<std::string> out = a;
        for (const auto& v : b)
            if (std::find(out.begin(), out.end(), v) == out.end())
                out.push_back(v);
        return out;
    }

private:
    using ResolvedCaps = std::vector<std::pair<std::vector<std::size_t>, int>>;

    static bool is_zero_exponent(const Exponent& e)
    {
        return std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
    }

    void check_vars() const
    {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            for (std::size_t j = i + 1; j < vars_.size(); ++j)
                if (vars_[i] == vars_[j])
                    throw std::invalid_argument("duplicate variable '" + vars_[i] + "'");
    }

    std::vector<std::string> remaining_vars(const std::map<std::string, int>& removed) const
    {
        std::vector<std::string> out;
        for (const auto& v : vars_)
            if (!removed.count(v))
                out.push_back(v);
        return out;
    }

    static ResolvedCaps resolve_caps(const std::vector<std::string>& vars, const std::vector<DegreeCap>& caps)
    {
        ResolvedCaps out;
        for (const auto& cap : caps) {
            std::vector<std::size_t> idx;
            for (const auto& name : cap.vars) {
                auto it = std::find(vars.begin(), vars.end(), name);
                if (it != vars.end())
                    idx.push_back(static_cast<std::size_t>(it - vars.begin()));
            }
            out.emplace_back(std::move(idx), cap.max);
        }
        return out;
    }

    static bool within(const Exponent& e, const ResolvedCaps& caps)
    {
        for (const auto& [idx, max] : caps) {
            int s = 0;
            for (std::size_t i : idx)
                s += e[i];
            if (s > max)
                return false;
        }
        return true;
    }

    MPoly& accumulate(const MPoly& o, const Rational& sign)
    {
        if (o.vars_ != vars_) {
            auto vars = union_vars(vars_, o.vars_);
            *this = with_vars(vars);
            return accumulate(o.with_vars(vars), sign);
        }
        for (const auto& [e, c] : o.terms_) {
            auto [it, inserted] = terms_.try_emplace(e, 0);
            it->second += sign * c;
            if (it->second == 0)
                terms_.erase(it);
        }
        return *this;
    }

    std::vector<std::string> vars_;
    Terms terms_;
};

inline MPoly multiply_truncated(const MPoly& a_in, const MPoly& b_in, const std::vector<DegreeCap>& caps)
{
    const MPoly* a = &a_in;
    const MPoly* b = &b_in;
    MPoly ua, ub;
    if (a_in.vars_ != b_in.vars_) {
        auto vars = MPoly::union_vars(a_in.vars_, b_in.vars_);
        ua = a_in.with_vars(vars);
        ub = b_in.with_vars(vars);
        a = &ua;
        b = &ub;
    }
    auto resolved = MPoly::resolve_caps(a->vars_, caps);
    MPoly out(a->vars_);
    const std::size_t n = a->vars_.size();
    Exponent e(n);
    for (const auto& [ea, ca] : a->terms_) {
        for (const auto& [eb, cb] : b->terms_) {
            for (std::size_t i = 0; i < n; ++i)
                e[i] = ea[i] + eb[i];
            if (!resolved.empty() && !MPoly::within(e, resolved))
                continue;
            auto [it, inserted] = out.terms_.try_emplace(e, 0);
            it->second += ca * cb;
        }
    }
    std::erase_if(out.terms_, [](const auto& kv) { return kv.second == 0; });
    return out;
}

// a / b when b divides a exactly; lex-leading-term division. Throws
// std::domain_error if a remainder is left.
inline MPoly divide_exact(const MPoly& a_in, const MPoly& b_in)
{
    if (b_in.is_zero())
        throw std::domain_error("divide_exact: division by zero");
    auto vars = MPoly::union_vars(a_in.vars_, b_in.vars_);
    MPoly rem = a_in.with_vars(vars);
    const MPoly b = b_in.with_vars(vars);
    MPoly q(vars);
    const auto& [lb, lcb] = *b.terms_.rbegin();
    while (!rem.is_zero()) {
        const auto& [lr, lcr] = *rem.terms_.rbegin();
        Exponent e(vars.size());
        for (std::size_t i = 0; i < vars.size(); ++i) {
            e[i] = lr[i] - lb[i];
            if (e[i] < 0)
                throw std::domain_error("divide_exact: inexact division");
        }
        MPoly t = MPoly::monomial(vars, e, lcr / lcb);
        q += t;
        rem -= t * b;
    }
    return q;
}

inline std::string MPoly::str() const
{
    if (terms_.empty())
        return "0";
    std::vector<std::pair<const Exponent*, const Rational*>> order;
    for (const auto& [e, c] : terms_)
        order.emplace_back(&e, &c);
    auto deg = [](const Exponent& e) {
        int s = 0;
        for (int v : e)
            s += v;
        return s;
    };
    std::sort(order.begin(), order.end(), [&](const auto& x, const auto& y) {
        int dx = deg(*x.first), dy = deg(*y.first);
        if (dx != dy)
            return dx > dy;
        return *x.first > *y.first;
    });
    std::string out;
    for (const auto& [e, c] : order) {
        Rational mag = abs(*c);
        if (out.empty())
            out += *c < 0 ? "-" : "";
        else
            out += *c < 0 ? " - " : " + ";
        std::string mono;
        for (std::size_t i = 0; i < e->size(); ++i) {
            if (!(*e)[i])
                continue;
            if (!mono.empty())
                mono += "*";
            mono += vars_[i];
            if ((*e)[i] > 1)
                mono += "^" + std::to_string((*e)[i]);
        }
        if (mono.empty())
            out += to_string(mag);
        else if (mag == 1)
            out += mono;
        else
            out += to_string(mag) + "*" + mono;
    }
    return out;
}

// (p(a,b) - p(b,a)) / (b - a); other variables are scalars.
inline MPoly divided_difference(const MPoly& p, const std::string& a = "a", const std::string& b = "b")
{
    auto vars = MPoly::union_vars(p.vars(), {a, b});
    MPoly q = p.with_vars(vars);
    MPoly swapped = q.rename({{a, "\x01swap"}}).rename({{b, a}}).rename({{"\x01swap", b}});
    MPoly numerator = q - swapped;
    MPoly denom = MPoly::variable(vars, b) - MPoly::variable(vars, a);
    return divide_exact(numerator, denom);
}

} // namespace symchern
