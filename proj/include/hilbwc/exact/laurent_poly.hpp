#pragma once

#include <map>
#include <ostream>
#include <string>
#include <string_view>

#include "hilbwc/exact/rational.hpp"

namespace hilbwc {

/// The fixed set of symbols that may carry a Laurent polynomial.
enum class Variable { t, t1, t2, q, z, u, eps, psi1, psi_inf };

constexpr std::string_view variable_name(Variable v)
{
    switch (v) {
    case Variable::t: return "t";
    case Variable::t1: return "t1";
    case Variable::t2: return "t2";
    case Variable::q: return "q";
    case Variable::z: return "z";
    case Variable::u: return "u";
    case Variable::eps: return "eps";
    case Variable::psi1: return "psi1";
    case Variable::psi_inf: return "psiinf";
    }
    return "?";
}

namespace detail {

/// Renders c*x^e the canonical way: coefficient omitted when it is 1, sign
/// pulled out for -1, exponent omitted when 1, variable omitted when e == 0.
inline std::string render_monomial(const Rational& c, std::string_view var, int e)
{
    if (e == 0)
        return c.to_string();
    std::string power(var);
    if (e != 1)
        power += "^" + std::to_string(e);
    if (c.is_one())
        return power;
    if (c == Rational(-1))
        return "-" + power;
    return c.to_string() + "*" + power;
}

/// Joins rendered terms with " + " / " - " so that "1 + -2*t" reads "1 - 2*t".
inline void append_term(std::string& out, const std::string& term)
{
    if (out.empty()) {
        out = term;
    } else if (!term.empty() && term.front() == '-') {
        out += " - " + term.substr(1);
    } else {
        out += " + " + term;
    }
}

} // namespace detail

/// Sparse univariate Laurent polynomial with exact rational coefficients.
/// The term map never stores a zero coefficient, so structural equality is
/// mathematical equality.
class LaurentPoly {
public:
    using Terms = std::map<int, Rational>;

    explicit LaurentPoly(Variable var = Variable::t) : var_(var) {}
    explicit LaurentPoly(const Rational& c, Variable var = Variable::t) : var_(var)
    {
        if (!c.is_zero())
            terms_.emplace(0, c);
    }

    static LaurentPoly monomial(const Rational& c, int exp, Variable var = Variable::t)
    {
        LaurentPoly p(var);
        if (!c.is_zero())
            p.terms_.emplace(exp, c);
        return p;
    }

    static LaurentPoly from_terms(const Terms& terms, Variable var = Variable::t)
    {
        LaurentPoly p(var);
        for (const auto& [e, c] : terms)
            p.add_term(e, c);
        return p;
    }

    Variable variable() const { return var_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t size() const { return terms_.size(); }

    Rational coeff(int exp) const
    {
        auto it = terms_.find(exp);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    int min_exp() const
    {
        if (is_zero())
            detail::fail("min_exp of the zero polynomial");
        return terms_.begin()->first;
    }

    int max_exp() const
    {
        if (is_zero())
            detail::fail("max_exp of the zero polynomial");
        return terms_.rbegin()->first;
    }

    /// True when every term has exponent exactly `degree` (the zero polynomial
    /// is homogeneous of every degree).
    bool is_homogeneous_of_degree(int degree) const
    {
        return is_zero() || (is_monomial() && terms_.begin()->first == degree);
    }

    void add_term(int exp, const Rational& c)
    {
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(exp, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    /// Multiplicative inverse; only monomials are units of the Laurent ring.
    LaurentPoly inverse() const
    {
        if (!is_monomial())
            detail::fail("only nonzero monomials are invertible in a Laurent ring");
        const auto& [e, c] = *terms_.begin();
        return monomial(c.inverse(), -e, var_);
    }

    LaurentPoly pow(int e) const
    {
        if (e < 0)
            return inverse().pow(-e);
        LaurentPoly result(Rational(1), var_);
        LaurentPoly base = *this;
        while (e > 0) {
            if (e & 1)
                result *= base;
            e >>= 1;
            if (e > 0)
                base *= base;
        }
        return result;
    }

    /// Shifts every exponent by `k`: multiplication by var^k.
    LaurentPoly shifted(int k) const
    {
        LaurentPoly p(var_);
        for (const auto& [e, c] : terms_)
            p.terms_.emplace(detail::checked_add(e, k), c);
        return p;
    }

    LaurentPoly renamed(Variable var) const
    {
        LaurentPoly p = *this;
        p.var_ = var;
        return p;
    }

    std::string to_string() const
    {
        if (is_zero())
            return "0";
        std::string out;
        for (const auto& [e, c] : terms_)
            detail::append_term(out, detail::render_monomial(c, variable_name(var_), e));
        return out;
    }

    LaurentPoly operator-() const
    {
        LaurentPoly p(var_);
        for (const auto& [e, c] : terms_)
            p.terms_.emplace(e, -c);
        return p;
    }

    LaurentPoly& operator+=(const LaurentPoly& o)
    {
        check_same_variable(o);
        if (is_zero())
            var_ = o.var_;
        for (const auto& [e, c] : o.terms_)
            add_term(e, c);
        return *this;
    }

    LaurentPoly& operator-=(const LaurentPoly& o)
    {
        check_same_variable(o);
        if (is_zero())
            var_ = o.var_;
        for (const auto& [e, c] : o.terms_)
            add_term(e, -c);
        return *this;
    }

    LaurentPoly& operator*=(const LaurentPoly& o)
    {
        check_same_variable(o);
        LaurentPoly r(var_);
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_)
                r.add_term(detail::checked_add(e1, e2), c1 * c2);
        return *this = std::move(r);
    }

    LaurentPoly& operator*=(const Rational& s)
    {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_)
            c *= s;
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
    friend LaurentPoly operator*(LaurentPoly a, const Rational& s) { return a *= s; }
    friend LaurentPoly operator*(const Rational& s, LaurentPoly a) { return a *= s; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b)
    {
        // Zero compares equal across variables; otherwise both must agree.
        if (a.is_zero() && b.is_zero())
            return true;
        return a.var_ == b.var_ && a.terms_ == b.terms_;
    }

    friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

private:
    void check_same_variable(const LaurentPoly& o) const
    {
        if (var_ != o.var_ && !is_zero() && !o.is_zero())
            detail::fail("Laurent polynomial variable mismatch: " + std::string(variable_name(var_)) +
                         " vs " + std::string(variable_name(o.var_)));
    }

    Variable var_;
    Terms terms_;
};

enum class PolyOp { add, sub, mul };

/// Checked binary operation; unlike the operators it refuses to mix
/// variables even when one side is zero.
inline LaurentPoly lp_arith(const LaurentPoly& a, const LaurentPoly& b, PolyOp op)
{
    if (a.variable() != b.variable())
        detail::fail("Laurent polynomial variable mismatch");
    switch (op) {
    case PolyOp::add: return a + b;
    case PolyOp::sub: return a - b;
    case PolyOp::mul: return a * b;
    }
    detail::fail("unknown polynomial operation");
}

} // namespace hilbwc
