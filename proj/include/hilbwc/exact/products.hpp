#pragma once

#include "hilbwc/exact/qseries.hpp"

namespace hilbwc {

namespace detail {

/// Multiplies `s` in place by 1/(1 - q^m).
inline void divide_by_one_minus_qm(RationalSeries& s, int m)
{
    for (int n = m; n <= s.order(); ++n)
        s[n] += s[n - m];
}

} // namespace detail

/// prod_{m>=1} 1/(1-q^m): coefficient of q^n is the partition count p(n).
inline RationalSeries euler_inverse_series(int order)
{
    RationalSeries s = RationalSeries::one(order);
    for (int m = 1; m <= order; ++m)
        detail::divide_by_one_minus_qm(s, m);
    return s;
}

/// MacMahon's function prod_{m>=1} 1/(1-q^m)^m: plane partition counts.
inline RationalSeries macmahon_series(int order)
{
    RationalSeries s = RationalSeries::one(order);
    for (int m = 1; m <= order; ++m)
        for (int rep = 0; rep < m; ++rep)
            detail::divide_by_one_minus_qm(s, m);
    return s;
}

/// 1/(1-q).
inline RationalSeries geometric_series(int order)
{
    RationalSeries s(order);
    for (int n = 0; n <= order; ++n)
        s[n] = Rational(1);
    return s;
}

} // namespace hilbwc
