#pragma once

#include <string>
#include <vector>

#include "hilbwc/exact/laurent_poly.hpp"

namespace hilbwc {

/// Polynomial in the formal top Chern class c_d of a d-dimensional variety.
class ChernSymbol {
public:
    explicit ChernSymbol(int d = 2, const Rational& constant = Rational(0)) : d_(d)
    {
        check_dimension(d);
        if (!constant.is_zero())
            coeffs_.push_back(constant);
    }

    /// The symbol c_d itself.
    static ChernSymbol generator(int d)
    {
        ChernSymbol c(d);
        c.coeffs_ = {Rational(0), Rational(1)};
        return c;
    }

    /// c_d * (c_d - 1) * ... * (c_d - k + 1).
    static ChernSymbol falling_factorial(int d, int k)
    {
        ChernSymbol r(d, Rational(1));
        for (int i = 0; i < k; ++i)
            r *= generator(d) - ChernSymbol(d, Rational(i));
        return r;
    }

    int dimension() const { return d_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    Rational coeff(int i) const
    {
        return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<std::size_t>(i)] : Rational(0);
    }

    /// Value at c_d = c.
    Rational evaluate(const Rational& c) const
    {
        Rational r(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            r = r * c + *it;
        return r;
    }

    std::string to_string() const
    {
        if (is_zero())
            return "0";
        const std::string var = "c_" + std::to_string(d_);
        std::string out;
        for (int i = 0; i <= degree(); ++i)
            if (!coeffs_[static_cast<std::size_t>(i)].is_zero())
                detail::append_term(out, detail::render_monomial(coeffs_[static_cast<std::size_t>(i)], var, i));
        return out;
    }

    ChernSymbol& operator+=(const ChernSymbol& o)
    {
        check_same(o);
        if (coeffs_.size() < o.coeffs_.size())
            coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    ChernSymbol& operator-=(const ChernSymbol& o) { return *this += o * Rational(-1); }

    ChernSymbol& operator*=(const ChernSymbol& o)
    {
        check_same(o);
        if (is_zero() || o.is_zero()) {
            coeffs_.clear();
            return *this;
        }
        std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
                r[i + j] += coeffs_[i] * o.coeffs_[j];
        coeffs_ = std::move(r);
        trim();
        return *this;
    }

    ChernSymbol& operator*=(const Rational& s)
    {
        for (auto& c : coeffs_)
            c *= s;
        trim();
        return *this;
    }

    friend ChernSymbol operator+(ChernSymbol a, const ChernSymbol& b) { return a += b; }
    friend ChernSymbol operator-(ChernSymbol a, const ChernSymbol& b) { return a -= b; }
    friend ChernSymbol operator*(ChernSymbol a, const ChernSymbol& b) { return a *= b; }
    friend ChernSymbol operator*(ChernSymbol a, const Rational& s) { return a *= s; }
    friend bool operator==(const ChernSymbol&, const ChernSymbol&) = default;

private:
    static void check_dimension(int d)
    {
        if (d < 1 || d > 3)
            detail::fail("FM calculus supports dimensions 1, 2, 3");
    }

    void check_same(const ChernSymbol& o) const
    {
        if (d_ != o.d_)
            detail::fail("Chern symbols of different dimensions");
    }

    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back().is_zero())
            coeffs_.pop_back();
    }

    int d_;
    std::vector<Rational> coeffs_; // ascending powers of c_d
};

/// One marking of an FM bracket: psi~ (if tilde), psi^power, and a class tag.
struct FMInsertion {
    bool tilde = false;
    int psi_power = 0;
    std::string class_tag = "1";

    bool is_plain_tilde() const { return tilde && psi_power == 0 && class_tag == "1"; }
    bool is_unit() const { return !tilde && psi_power == 0 && class_tag == "1"; }

    std::string to_string() const
    {
        std::string s;
        auto put = [&s](const std::string& f) { s += s.empty() ? f : "*" + f; };
        if (tilde)
            put("psi~");
        if (psi_power == 1)
            put("psi");
        else if (psi_power > 1)
            put("psi^" + std::to_string(psi_power));
        if (class_tag != "1" || s.empty())
            put(class_tag);
        return s;
    }

    friend bool operator==(const FMInsertion&, const FMInsertion&) = default;
};

/// Symbolic bracket <ins_1 ... ins_n>_n over the FM space of a d-fold.
struct FMExpr {
    int d = 2;
    std::vector<FMInsertion> insertions;

    int bracket_size() const { return static_cast<int>(insertions.size()); }

    std::string to_string() const
    {
        std::string s = "<";
        for (std::size_t i = 0; i < insertions.size(); ++i)
            s += (i ? ", " : "") + insertions[i].to_string();
        return s + ">_" + std::to_string(insertions.size());
    }

    friend bool operator==(const FMExpr&, const FMExpr&) = default;
};

struct DilatonResult {
    ChernSymbol factor;
    FMExpr reduced;
};

struct StringSummand {
    Rational sign;
    FMExpr reduced;
};

/// Removes a trailing bare psi~ marking:
/// <... psi~_{n+1}>_{n+1} = (-1)^d (c_d - n) <...>_n.
inline DilatonResult dilaton_step(const FMExpr& e)
{
    if (e.insertions.empty() || !e.insertions.back().is_plain_tilde())
        detail::fail("dilaton not applicable to " + e.to_string());
    FMExpr reduced = e;
    reduced.insertions.pop_back();
    const Rational sign = e.d % 2 == 0 ? Rational(1) : Rational(-1);
    ChernSymbol factor = (ChernSymbol::generator(e.d) - ChernSymbol(e.d, Rational(reduced.bracket_size()))) * sign;
    return {std::move(factor), std::move(reduced)};
}

/// Removes a trailing unit marking when all others carry psi~:
/// the result is (-1)^(d-1) times the sum over clearing one psi~.
inline std::vector<StringSummand> string_step(const FMExpr& e)
{
    if (e.insertions.empty() || !e.insertions.back().is_unit())
        detail::fail("string not applicable to " + e.to_string());
    for (std::size_t i = 0; i + 1 < e.insertions.size(); ++i)
        if (!e.insertions[i].tilde)
            detail::fail("string not applicable to " + e.to_string());
    const Rational sign = (e.d - 1) % 2 == 0 ? Rational(1) : Rational(-1);
    std::vector<StringSummand> out;
    for (std::size_t i = 0; i + 1 < e.insertions.size(); ++i) {
        FMExpr reduced = e;
        reduced.insertions.pop_back();
        reduced.insertions[i].tilde = false;
        out.push_back({sign, std::move(reduced)});
    }
    return out;
}

/// <psi~ ... psi~>_k evaluated by k dilaton steps, with <>_0 = 1.
inline ChernSymbol reduce_pure_tilde(int k, int d)
{
    if (k < 0)
        detail::fail("bracket size must be nonnegative");
    FMExpr e{d, std::vector<FMInsertion>(static_cast<std::size_t>(k), FMInsertion{true, 0, "1"})};
    ChernSymbol value(d, Rational(1));
    while (!e.insertions.empty()) {
        auto step = dilaton_step(e);
        value *= step.factor;
        e = std::move(step.reduced);
    }
    return value;
}

} // namespace hilbwc
