#pragma once

#include <string>
#include <variant>

#include "hilbwc/fmcalc/tn.hpp"
#include "hilbwc/hilb/full_torus.hpp"
#include "hilbwc/hilb/localization.hpp"

namespace hilbwc {

/// Nonpolar part of an I-function of Hilb_n(C^2): coeff * u^exp in the
/// shifted variable u = t + z, or zero.
struct UMonomial {
    Rational coeff;
    int exp = 0;

    static UMonomial zero() { return {}; }
    bool is_zero() const { return coeff.is_zero(); }

    std::string to_string() const
    {
        return is_zero() ? "0" : detail::render_monomial(coeff, "u", exp);
    }

    friend bool operator==(const UMonomial& a, const UMonomial& b)
    {
        return (a.is_zero() && b.is_zero()) || (a.coeff == b.coeff && a.exp == b.exp);
    }
};

/// Where an I-function is restricted: the one-point stratum FM_[1](C^2) = C^2,
/// or the locus T_N of N >= 2 points on a bubble tree over the origin.
class StratumRestriction {
public:
    enum class Kind { fm1, tn };

    static StratumRestriction fm1() { return StratumRestriction(Kind::fm1, 1); }
    static StratumRestriction tn(int n_points)
    {
        if (n_points < 2)
            detail::fail("the T_N stratum needs N >= 2");
        return StratumRestriction(Kind::tn, n_points);
    }

    Kind kind() const { return kind_; }
    int points() const { return n_; }

private:
    StratumRestriction(Kind k, int n) : kind_(k), n_(n) {}
    Kind kind_;
    int n_;
};

/// I_n(z) = (t+z)^2 <prod ch>_n(t+z). The bracket is C t^D with
/// D = sum(k) - 2n, so the I-function is C u^(D+2); only D + 2 >= 0 survives
/// the nonpolar projection.
inline UMonomial nonpolar_ifunction(int n, const InsertionList& ks)
{
    if (n < 1)
        detail::fail("I-functions need n >= 1");
    const int exp = ks.total_degree() - 2 * n + 2;
    if (exp < 0)
        return UMonomial::zero();
    const LaurentPoly bracket = hilb_integral(n, ks);
    if (bracket.is_zero())
        return UMonomial::zero();
    return {bracket.coeff(exp - 2), exp};
}

using RestrictedClass = std::variant<LaurentPoly, TnTerm>;

/// On FM_[1] the psi-class vanishes and u = t; on T_N, psi restricts to
/// psi1 - t so u = t + z with z = -psi becomes -psi1.
inline RestrictedClass restrict_ifunction(const UMonomial& m, const StratumRestriction& s)
{
    if (s.kind() == StratumRestriction::Kind::fm1)
        return LaurentPoly::monomial(m.coeff, m.exp);
    const Rational sign = m.exp % 2 == 0 ? Rational(1) : Rational(-1);
    return TnTerm{LaurentPoly(m.coeff * sign), m.is_zero() ? 0 : m.exp, 0};
}

/// Checks that the eps-series diagonal route agrees with the full-torus
/// route restricted to t1 = t2.
inline bool shift_consistency(int n, const InsertionList& ks)
{
    return full_torus_diagonal(n, ks) == hilb_integral(n, ks);
}

} // namespace hilbwc
