#pragma once

// Reader for polynomial literals such as "5X^2+4XY+28X+Y^2+12Y+39" or
// "(T1^2 - T1 - 2*T2)/2*e1^2". Implicit multiplication is allowed. When a
// variable list is supplied, names are matched greedily against that list so
// that "XY" reads as X*Y; otherwise a name is a maximal identifier.

#include "symchern/mpoly.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace symchern {

namespace detail {

class PolyParser {
public:
    PolyParser(std::string_view text, std::vector<std::string> vars) : s_(text), vars_(std::move(vars)) {}

    MPoly run()
    {
        MPoly p = expr();
        skip();
        if (pos_ != s_.size())
            fail("unexpected character");
        return p.with_vars(union_with(p));
    }

private:
    std::vector<std::string> union_with(const MPoly& p) const { return MPoly::union_vars(vars_, p.vars()); }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw std::invalid_argument("parse_mpoly: " + what + " at offset " + std::to_string(pos_) + " in '" +
                                    std::string(s_) + "'");
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    bool peek(char c)
    {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool at_atom_start()
    {
        skip();
        if (pos_ >= s_.size())
            return false;
        char c = s_[pos_];
        return c == '(' || std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    MPoly expr()
    {
        MPoly acc = term();
        while (true) {
            if (peek('+')) {
                ++pos_;
                acc += term();
            } else if (peek('-')) {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    MPoly term()
    {
        MPoly acc = unary();
        while (true) {
            if (peek('*')) {
                ++pos_;
                acc *= unary();
            } else if (peek('/')) {
                ++pos_;
                MPoly d = unary();
                if (!d.is_constant() || d.is_zero())
                    fail("division by a non-constant or zero");
                acc *= Rational(1) / d.constant_term();
            } else if (at_atom_start()) {
                acc *= power();
            } else {
                return acc;
            }
        }
    }

    MPoly unary()
    {
        if (peek('-')) {
            ++pos_;
            return -unary();
        }
        if (peek('+')) {
            ++pos_;
            return unary();
        }
        return power();
    }

    MPoly power()
    {
        MPoly base = atom();
        if (peek('^')) {
            ++pos_;
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            if (start == pos_)
                fail("expected exponent");
            base = base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
        }
        return base;
    }

    MPoly atom()
    {
        skip();
        if (pos_ >= s_.size())
            fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            MPoly p = expr();
            if (!peek(')'))
                fail("expected ')'");
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            return MPoly::constant(vars_, Rational(Integer(std::string(s_.substr(start, pos_ - start)))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string n = name();
            return vars_.empty() ? MPoly::variable(n) : MPoly::variable(vars_, n);
        }
        fail("unexpected character");
    }

    std::string name()
    {
        if (!vars_.empty()) {
            std::size_t best = 0;
            for (const auto& v : vars_)
                if (v.size() > best && s_.substr(pos_, v.size()) == v)
                    best = v.size();
            if (best == 0)
                fail("unknown variable");
            std::string n(s_.substr(pos_, best));
            pos_ += best;
            return n;
        }
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    std::string_view s_;
    std::vector<std::string> vars_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline MPoly parse_mpoly(std::string_view text, std::vector<std::string> vars = {})
{
    return detail::PolyParser(text, std::move(vars)).run();
}

} // namespace symchern
