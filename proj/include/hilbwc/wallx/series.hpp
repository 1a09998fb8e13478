#pragma once

#include <vector>

#include "hilbwc/exact/products.hpp"
#include "hilbwc/fmcalc/fm_expr.hpp"
#include "hilbwc/fmcalc/tn.hpp"
#include "hilbwc/ifun/ifunction.hpp"

namespace hilbwc {

/// Generating series sum_n <ch_k>_n q^n of Hilb_n(C^2), built from the finitely
/// many nonpolar I-functions (2n <= k+2) and integrals over the strata:
///
///   <ch_k> = sum_N  int_{T_N} I(q, -psi1, ch_k) / (t^2 (t - psiinf)) * q^(N-1)/(N-1)!
///
/// where the N = 1 stratum is C^2 itself (psi vanishes, normal bundle t^2).
inline LaurentSeries ch_series(int k, int q_order)
{
    if (k < 0)
        detail::fail("ch_series needs k >= 0");
    if (q_order < 1)
        detail::fail("ch_series needs q_order >= 1");
    LaurentSeries series(q_order);
    const InsertionList ks{k};
    for (int n = 1; 2 * n <= k + 2 && n <= q_order; ++n) {
        const UMonomial seed = nonpolar_ifunction(n, ks);
        if (seed.is_zero())
            continue;

        const auto on_c2 = std::get<LaurentPoly>(restrict_ifunction(seed, StratumRestriction::fm1()));
        series[n] += on_c2.shifted(-2);

        for (int points = 2; n + points - 1 <= q_order; ++points) {
            const auto marked = std::get<TnTerm>(restrict_ifunction(seed, StratumRestriction::tn(points)));
            // 1/(t^2 (t - psiinf)) = sum_j psiinf^j t^(-3-j); only j <= dim T_N matters.
            std::vector<TnTerm> integrand;
            for (int j = 0; j <= 2 * points - 3; ++j)
                integrand.push_back({marked.coeff.shifted(-3 - j), marked.psi1_power, j});
            const LaurentPoly value = tn_eval(points, integrand) * Rational::factorial(points - 1).inverse();
            series[n + points - 1] += value;
        }
    }
    return series;
}

/// 1/(1-q) for curves, the Euler function inverse for surfaces.
inline RationalSeries euler_base_series(int d, int q_order)
{
    if (d == 1)
        return geometric_series(q_order);
    if (d == 2)
        return euler_inverse_series(q_order);
    detail::fail("Euler-characteristic series are implemented for d = 1, 2");
}

/// Value of the FM bracket <prod_i I(-psi_i)>_k / k! for the Euler class
/// integrand with c_d = c. The restricted I-function is -psi~ on a curve and
/// psi~ on a surface, so the bracket reduces by dilaton steps.
inline Rational euler_fm_bracket(int d, int k, const Rational& c)
{
    Rational value = reduce_pure_tilde(k, d).evaluate(c) * Rational::factorial(k).inverse();
    if (d == 1 && k % 2 == 1)
        value = -value;
    return value;
}

/// Wall-crossing side: 1 + sum_{k>=1} <...>_k/k! * (F(q) - 1)^k.
inline RationalSeries euler_series_wc(int d, int c, int q_order)
{
    if (q_order < 0)
        detail::fail("order must be nonnegative");
    const RationalSeries base = euler_base_series(d, q_order);
    const RationalSeries reduced = base - RationalSeries::one(q_order);
    RationalSeries result = RationalSeries::one(q_order);
    RationalSeries power = RationalSeries::one(q_order);
    for (int k = 1; k <= q_order; ++k) {
        power *= reduced;
        const Rational bracket = euler_fm_bracket(d, k, Rational(c));
        if (!bracket.is_zero())
            result += power * bracket;
    }
    return result;
}

/// Closed form F(q)^c.
inline RationalSeries euler_series_closed(int d, int c, int q_order)
{
    if (q_order < 0)
        detail::fail("order must be nonnegative");
    return qs_pow_int(euler_base_series(d, q_order), c);
}

struct DtSides {
    RationalSeries substituted; // exp(c q') with q' = log M(-q)
    RationalSeries closed;      // M(-q)^c
};

inline DtSides dt_identity_sides(int c, int q_order)
{
    if (q_order < 1)
        detail::fail("dt check needs order >= 1");
    const RationalSeries m_neg = macmahon_series(q_order).scaled_variable(Rational(-1));
    const RationalSeries outer = qs_exp(RationalSeries::monomial(Rational(c), 1, q_order));
    return {qs_compose(outer, qs_log(m_neg)), qs_pow_int(m_neg, c)};
}

/// Threefold identity: substituting q' = log M(-q) into exp(c q') gives M(-q)^c.
inline bool dt_identity_check(int c, int q_order)
{
    const auto sides = dt_identity_sides(c, q_order);
    return sides.substituted == sides.closed;
}

} // namespace hilbwc
