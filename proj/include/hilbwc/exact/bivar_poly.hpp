#pragma once

#include <map>
#include <string>
#include <utility>

#include "hilbwc/exact/laurent_poly.hpp"

namespace hilbwc {

/// Polynomial in two variables (t1, t2 by default) with nonnegative exponents.
class BivarPoly {
public:
    using Exponents = std::pair<int, int>;
    using Terms = std::map<Exponents, Rational>;

    BivarPoly() = default;
    explicit BivarPoly(const Rational& c)
    {
        if (!c.is_zero())
            terms_.emplace(Exponents{0, 0}, c);
    }

    static BivarPoly monomial(const Rational& c, int e1, int e2)
    {
        if (e1 < 0 || e2 < 0)
            detail::fail("bivariate polynomial exponents must be nonnegative");
        BivarPoly p;
        if (!c.is_zero())
            p.terms_.emplace(Exponents{e1, e2}, c);
        return p;
    }

    /// The linear form a*t1 + b*t2.
    static BivarPoly linear(int a, int b)
    {
        BivarPoly p;
        p.add_term(1, 0, Rational(a));
        p.add_term(0, 1, Rational(b));
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(int e1, int e2) const
    {
        auto it = terms_.find({e1, e2});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Degree when homogeneous, -1 for the zero polynomial; throws otherwise.
    int homogeneous_degree() const
    {
        if (is_zero())
            return -1;
        const int d = terms_.begin()->first.first + terms_.begin()->first.second;
        for (const auto& [e, c] : terms_)
            if (e.first + e.second != d)
                detail::fail("bivariate polynomial is not homogeneous");
        return d;
    }

    void add_term(int e1, int e2, const Rational& c)
    {
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(Exponents{e1, e2}, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    BivarPoly pow(int e) const
    {
        if (e < 0)
            detail::fail("negative power of a polynomial");
        BivarPoly result(Rational(1));
        BivarPoly base = *this;
        while (e > 0) {
            if (e & 1)
                result *= base;
            e >>= 1;
            if (e > 0)
                base *= base;
        }
        return result;
    }

    /// Exchanges the roles of the two variables.
    BivarPoly swapped() const
    {
        BivarPoly p;
        for (const auto& [e, c] : terms_)
            p.terms_.emplace(Exponents{e.second, e.first}, c);
        return p;
    }

    /// Substitutes t1 -> a11*x + a12*y and t2 -> a21*x + a22*y.
    BivarPoly substitute_linear(int a11, int a12, int a21, int a22) const
    {
        const BivarPoly x1 = linear(a11, a12);
        const BivarPoly x2 = linear(a21, a22);
        BivarPoly r;
        for (const auto& [e, c] : terms_)
            r += BivarPoly(c) * x1.pow(e.first) * x2.pow(e.second);
        return r;
    }

    /// Restriction to t1 = t2 = t.
    LaurentPoly diagonal() const
    {
        LaurentPoly p(Variable::t);
        for (const auto& [e, c] : terms_)
            p.add_term(detail::checked_add(e.first, e.second), c);
        return p;
    }

    std::string to_string() const
    {
        if (is_zero())
            return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            std::string mono;
            auto power = [&](const char* v, int k) {
                if (k == 0)
                    return;
                if (!mono.empty())
                    mono += "*";
                mono += v;
                if (k != 1)
                    mono += "^" + std::to_string(k);
            };
            power("t1", e.first);
            power("t2", e.second);
            std::string term;
            if (mono.empty())
                term = c.to_string();
            else if (c.is_one())
                term = mono;
            else if (c == Rational(-1))
                term = "-" + mono;
            else
                term = c.to_string() + "*" + mono;
            detail::append_term(out, term);
        }
        return out;
    }

    BivarPoly operator-() const
    {
        BivarPoly p;
        for (const auto& [e, c] : terms_)
            p.terms_.emplace(e, -c);
        return p;
    }

    BivarPoly& operator+=(const BivarPoly& o)
    {
        for (const auto& [e, c] : o.terms_)
            add_term(e.first, e.second, c);
        return *this;
    }

    BivarPoly& operator-=(const BivarPoly& o)
    {
        for (const auto& [e, c] : o.terms_)
            add_term(e.first, e.second, -c);
        return *this;
    }

    BivarPoly& operator*=(const BivarPoly& o)
    {
        BivarPoly r;
        for (const auto& [e, c] : terms_)
            for (const auto& [f, d] : o.terms_)
                r.add_term(detail::checked_add(e.first, f.first), detail::checked_add(e.second, f.second), c * d);
        return *this = std::move(r);
    }

    BivarPoly& operator*=(const Rational& s)
    {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_)
            c *= s;
        return *this;
    }

    friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
    friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
    friend BivarPoly operator*(BivarPoly a, const BivarPoly& b) { return a *= b; }
    friend BivarPoly operator*(BivarPoly a, const Rational& s) { return a *= s; }
    friend BivarPoly operator*(const Rational& s, BivarPoly a) { return a *= s; }
    friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

private:
    Terms terms_;
};

} // namespace hilbwc
