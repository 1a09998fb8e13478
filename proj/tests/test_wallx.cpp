#include <gtest/gtest.h>

#include "hilbwc/hilb.hpp"
#include "hilbwc/wallx.hpp"

using namespace hilbwc;

TEST(WallTerms, Counts)
{
    EXPECT_EQ(expand_wall_terms(2, 0, {1}).size(), 2u);
    EXPECT_EQ(expand_wall_terms(2, 0, {2}).size(), 1u);
    EXPECT_EQ(expand_wall_terms(2, 1, {1}).size(), 5u);
    EXPECT_THROW(expand_wall_terms(2, 0, {3}), error);
    EXPECT_THROW(expand_wall_terms(2, 0, {0}), error);
}

TEST(WallTerms, Shape)
{
    for (const auto& term : expand_wall_terms(5, 2, {2})) {
        EXPECT_EQ(term.n_prime, 5 - 2 * term.k);
        EXPECT_EQ(static_cast<int>(term.blocks.size()), term.k);
        EXPECT_EQ(term.symmetry_factor, Rational::factorial(term.k).inverse());
        std::size_t placed = term.retained.size();
        for (const auto& b : term.blocks)
            placed += b.size();
        EXPECT_EQ(placed, 2u);
    }
}

TEST(FullCrossing, Counts)
{
    EXPECT_EQ(expand_full_crossing(3, 0).size(), 4u);
    EXPECT_EQ(expand_full_crossing(5, 0).size(), 16u);
    EXPECT_EQ(expand_full_crossing(2, 1).size(), 3u);
    EXPECT_THROW(expand_full_crossing(0, 0), error);
}

TEST(ChSeries, DisplayedCoefficients)
{
    const LaurentSeries s = ch_series(4, 10);
    const std::vector<Rational> ch4 = {Rational(0),         Rational(-1, 16),    Rational(-5, 144),
                                       Rational(-1, 288),   Rational(1, 288),    Rational(7, 3456),
                                       Rational(11, 17280), Rational(1, 6912),   Rational(19, 725760),
                                       Rational(23, 5806080)};
    for (int n = 1; n <= 10; ++n)
        EXPECT_EQ(s[n], LaurentPoly::monomial(ch4[static_cast<std::size_t>(n - 1)], 4 - 2 * n)) << n;

    const LaurentSeries s6 = ch_series(6, 10);
    const std::vector<Rational> ch6 = {Rational(1, 120),     Rational(263, 103680),   Rational(59, 103680),
                                       Rational(13, 129600), Rational(157, 10886400), Rational(43, 24883200)};
    for (int n = 5; n <= 10; ++n)
        EXPECT_EQ(s6[n], LaurentPoly::monomial(ch6[static_cast<std::size_t>(n - 5)], 6 - 2 * n)) << n;
}

TEST(ChSeries, AgreesWithLocalization)
{
    for (int k = 0; k <= 7; ++k) {
        const LaurentSeries s = ch_series(k, 6);
        EXPECT_TRUE(s[0].is_zero());
        for (int n = 1; n <= 6; ++n)
            EXPECT_EQ(s[n], hilb_integral(n, {k})) << "k=" << k << " n=" << n;
    }
}

TEST(ChSeries, Errors)
{
    EXPECT_THROW(ch_series(-1, 3), error);
    EXPECT_THROW(ch_series(4, 0), error);
}

TEST(Euler, Examples)
{
    const RationalSeries s = euler_series_wc(2, 24, 3);
    EXPECT_EQ(s.to_string(), "1 + 24*q + 324*q^2 + 3200*q^3 + O(q^4)");
    const RationalSeries curve = euler_series_wc(1, 2, 4);
    for (int n = 0; n <= 4; ++n)
        EXPECT_EQ(curve[n], Rational(n + 1));
    EXPECT_EQ(euler_series_wc(1, -3, 6), euler_series_closed(1, -3, 6));
    EXPECT_EQ(euler_series_wc(2, 0, 6), RationalSeries::one(6));
    EXPECT_THROW(euler_series_wc(3, 1, 4), error);
}

TEST(Euler, WallCrossingMatchesClosedForm)
{
    for (int d = 1; d <= 2; ++d)
        for (int c = -4; c <= 8; ++c)
            EXPECT_EQ(euler_series_wc(d, c, 8), euler_series_closed(d, c, 8)) << "d=" << d << " c=" << c;
}

TEST(Euler, SumOverFullCrossingTerms)
{
    // Coefficient of q^n as an explicit sum over ordered block decompositions.
    for (int d = 1; d <= 2; ++d) {
        const int c = 5, order = 6;
        const RationalSeries base = euler_base_series(d, order);
        const RationalSeries wc = euler_series_wc(d, c, order);
        for (int n = 1; n <= order; ++n) {
            Rational sum(0);
            for (const auto& term : expand_full_crossing(n, 0)) {
                const int k = static_cast<int>(term.sizes.size());
                Rational value = term.symmetry_factor * reduce_pure_tilde(k, d).evaluate(Rational(c));
                if (d == 1 && k % 2 == 1)
                    value = -value;
                for (int s : term.sizes)
                    value *= base[s];
                sum += value;
            }
            EXPECT_EQ(wc[n], sum) << "d=" << d << " n=" << n;
        }
    }
}

TEST(Dt, Identity)
{
    EXPECT_TRUE(dt_identity_check(-6, 16));
    const DtSides sides = dt_identity_sides(1, 3);
    EXPECT_EQ(sides.closed.to_string(), "1 - q + 3*q^2 - 6*q^3 + O(q^4)");
    EXPECT_EQ(sides.substituted, sides.closed);
    for (int c = -3; c <= 3; ++c)
        EXPECT_TRUE(dt_identity_check(c, 8)) << c;
    EXPECT_THROW(dt_identity_sides(1, 0), error);
}
