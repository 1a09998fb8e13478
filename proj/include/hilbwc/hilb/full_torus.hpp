#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "hilbwc/hilb/localization.hpp"

namespace hilbwc {

/// Fixed-point contribution over the full torus, kept unreduced as
/// numerator / prod(denominator weights).
struct FullTorusTerm {
    BivarPoly numerator;
    std::vector<Weight> denominator; // sorted

    FullTorusTerm swapped() const
    {
        FullTorusTerm s{numerator.swapped(), {}};
        for (const Weight& w : denominator)
            s.denominator.push_back(w.swapped());
        std::sort(s.denominator.begin(), s.denominator.end());
        return s;
    }

    friend bool operator==(const FullTorusTerm&, const FullTorusTerm&) = default;
};

inline FullTorusTerm full_torus_contribution(const Partition& lambda, const InsertionList& ks)
{
    FullTorusTerm term{insertion_value(lambda, ks), tangent_weights(lambda)};
    std::sort(term.denominator.begin(), term.denominator.end());
    return term;
}

namespace detail {

/// Splits a*t1 + b*t2 into scale * (primitive form with positive leading entry).
inline std::pair<Rational, Weight> normalize_linear_form(Weight w)
{
    if (w.is_zero())
        fail("zero tangent weight");
    int g = std::gcd(w.a, w.b);
    if (w.a < 0 || (w.a == 0 && w.b < 0))
        g = -g;
    return {Rational(g), Weight{w.a / g, w.b / g}};
}

} // namespace detail

/// Sums the full-torus contributions over a common denominator and restricts
/// to t1 = t2 = t. The common denominator is the least common multiple of the
/// linear factors (max multiplicity per primitive form), so no polynomial GCD
/// is needed. Restriction goes through t1 = s, t2 = s + h, cancelling the
/// lowest power of h shared by numerator and denominator.
inline LaurentPoly full_torus_diagonal(int n, const InsertionList& ks)
{
    if (n < 1)
        detail::fail("localization needs n >= 1");

    struct Factored {
        BivarPoly numerator;
        Rational scale;
        std::map<Weight, int> multiplicity;
    };
    std::vector<Factored> terms;
    std::map<Weight, int> lcm;
    for (const auto& lambda : enumerate_partitions(n)) {
        const FullTorusTerm t = full_torus_contribution(lambda, ks);
        Factored f{t.numerator, Rational(1), {}};
        for (const Weight& w : t.denominator) {
            const auto [scale, form] = detail::normalize_linear_form(w);
            f.scale *= scale;
            ++f.multiplicity[form];
        }
        for (const auto& [form, m] : f.multiplicity)
            lcm[form] = std::max(lcm[form], m);
        terms.push_back(std::move(f));
    }

    // Numerator over the common denominator, already in (s, h) coordinates.
    BivarPoly numerator;
    for (const Factored& f : terms) {
        BivarPoly part = f.numerator.substitute_linear(1, 0, 1, 1) * f.scale.inverse();
        for (const auto& [form, m] : lcm) {
            const int missing = m - (f.multiplicity.count(form) ? f.multiplicity.at(form) : 0);
            if (missing > 0)
                part *= BivarPoly::linear(form.a + form.b, form.b).pow(missing);
        }
        numerator += part;
    }

    // The denominator restricted to (s, h): its lowest h-order term.
    int h_order = 0;
    int s_degree = 0;
    Rational leading(1);
    for (const auto& [form, m] : lcm) {
        if (form.a + form.b == 0) {
            h_order += m;
            leading *= Rational(form.b).pow(m);
        } else {
            s_degree += m;
            leading *= Rational(form.a + form.b).pow(m);
        }
    }

    LaurentPoly value(Variable::t);
    for (const auto& [e, c] : numerator.terms()) {
        if (e.second < h_order)
            throw regularity_error("full-torus sum has a pole on the diagonal");
        if (e.second == h_order)
            value.add_term(e.first - s_degree, c / leading);
    }
    return value;
}

} // namespace hilbwc
