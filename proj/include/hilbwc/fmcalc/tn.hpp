#pragma once

#include <span>
#include <string>

#include "hilbwc/exact/laurent_poly.hpp"

namespace hilbwc {

/// coeff * psi1^psi1_power * psiinf^psi_inf_power, an integrand on T_N.
struct TnTerm {
    LaurentPoly coeff{Variable::t};
    int psi1_power = 0;
    int psi_inf_power = 0;

    std::string to_string() const
    {
        std::string s = "(" + coeff.to_string() + ")";
        if (psi1_power)
            s += "*psi1^" + std::to_string(psi1_power);
        if (psi_inf_power)
            s += "*psiinf^" + std::to_string(psi_inf_power);
        return s;
    }

    friend bool operator==(const TnTerm&, const TnTerm&) = default;
};

/// Integral of psi1^a * psiinf^b over T_N (dimension 2N-3). Repeatedly
/// stripping psi^2 factors by the string equation reduces to T_2, giving
/// (-1)^ceil(a/2) * binom(N-2, floor(a/2)) in the top degree and 0 elsewhere.
inline Rational tn_integral(int n_points, int a, int b)
{
    if (n_points < 2)
        detail::fail("T_N integrals need N >= 2");
    if (a < 0 || b < 0)
        detail::fail("psi powers must be nonnegative");
    if (a + b != 2 * n_points - 3)
        return Rational(0);
    const int sign = ((a + 1) / 2) % 2 == 0 ? 1 : -1;
    return Rational(sign) * Rational::binomial(n_points - 2, a / 2);
}

/// Linear extension of tn_integral to a polynomial integrand.
inline LaurentPoly tn_eval(int n_points, std::span<const TnTerm> terms)
{
    if (n_points < 2)
        detail::fail("T_N integrals need N >= 2");
    LaurentPoly sum(Variable::t);
    for (const TnTerm& term : terms) {
        const Rational v = tn_integral(n_points, term.psi1_power, term.psi_inf_power);
        if (!v.is_zero())
            sum += term.coeff * v;
    }
    return sum;
}

} // namespace hilbwc
