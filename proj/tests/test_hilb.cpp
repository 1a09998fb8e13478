#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "hilbwc/hilb.hpp"

using namespace hilbwc;

namespace {

// Euler's pentagonal recurrence for p(n).
std::vector<long> pentagonal_counts(int up_to)
{
    std::vector<long> p(static_cast<std::size_t>(up_to) + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= up_to; ++n) {
        long s = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > n)
                break;
            const long sign = k % 2 ? 1 : -1;
            s += sign * p[static_cast<std::size_t>(n - g1)];
            if (g2 <= n)
                s += sign * p[static_cast<std::size_t>(n - g2)];
        }
        p[static_cast<std::size_t>(n)] = s;
    }
    return p;
}

std::vector<Weight> sorted(std::vector<Weight> w)
{
    std::sort(w.begin(), w.end());
    return w;
}

LaurentPoly t_term(const Rational& c, int e) { return LaurentPoly::monomial(c, e); }

} // namespace

TEST(Partitions, Counts)
{
    const auto p = pentagonal_counts(15);
    for (int n = 0; n <= 15; ++n)
        EXPECT_EQ(static_cast<long>(enumerate_partitions(n).size()), p[static_cast<std::size_t>(n)]) << n;
    EXPECT_EQ(enumerate_partitions(4).size(), 5u);
    EXPECT_EQ(enumerate_partitions(8).size(), 22u);
    EXPECT_THROW(enumerate_partitions(-1), error);
}

TEST(Partitions, OrderAndValidity)
{
    const auto ps = enumerate_partitions(4);
    EXPECT_EQ(ps.front().to_string(), "(4)");
    EXPECT_EQ(ps.back().to_string(), "(1,1,1,1)");
    for (const auto& p : ps)
        EXPECT_EQ(p.size(), 4);
    EXPECT_THROW(Partition({1, 2}), error);
    EXPECT_THROW(Partition({2, 0}), error);
    EXPECT_EQ(Partition({3, 1}).conjugate(), Partition({2, 1, 1}));
}

TEST(Partitions, ArmLeg)
{
    const Partition p({3, 1});
    EXPECT_EQ(arm_leg(p, {0, 0}), (ArmLeg{2, 1}));
    EXPECT_EQ(arm_leg(p, {0, 2}), (ArmLeg{0, 0}));
    EXPECT_EQ(arm_leg(p, {1, 0}), (ArmLeg{0, 0}));
    EXPECT_THROW(arm_leg(p, {1, 1}), error);
    EXPECT_THROW(arm_leg(Partition(std::vector<int>{}), {0, 0}), error);
}

TEST(FixedPoints, Weights)
{
    EXPECT_EQ(tangent_weights(Partition({1})), (std::vector<Weight>{{1, 0}, {0, 1}}));
    EXPECT_EQ(tangent_weights(Partition({2})), (std::vector<Weight>{{2, 0}, {-1, 1}, {1, 0}, {0, 1}}));
    EXPECT_EQ(taut_weights(Partition({2, 1})), (std::vector<Weight>{{0, 0}, {1, 0}, {0, 1}}));
    for (const auto& lambda : enumerate_partitions(6))
        for (const Weight& w : tangent_weights(lambda))
            EXPECT_FALSE(w.is_zero());
}

TEST(FixedPoints, TransposeSwapsWeights)
{
    for (int n = 1; n <= 7; ++n) {
        for (const auto& lambda : enumerate_partitions(n)) {
            std::vector<Weight> swapped;
            for (const Weight& w : tangent_weights(lambda))
                swapped.push_back(w.swapped());
            EXPECT_EQ(sorted(tangent_weights(lambda.conjugate())), sorted(swapped)) << lambda.to_string();
        }
    }
}

TEST(FixedPoints, ChernCharacterValues)
{
    const Partition two({2});
    EXPECT_EQ(ch_value(two, 0), BivarPoly::monomial(Rational(2), 0, 0));
    // Fibre weights are the duals of the monomial labels.
    EXPECT_EQ(ch_value(two, 1), BivarPoly::monomial(Rational(-1), 1, 0));
    EXPECT_EQ(ch_value(two, 2), BivarPoly::monomial(Rational(1, 2), 2, 0));
    EXPECT_EQ(ch_value(Partition({1, 1}), 3), BivarPoly::monomial(Rational(-1, 6), 0, 3));
    EXPECT_THROW(ch_value(two, -1), error);
}

TEST(Localization, Examples)
{
    EXPECT_EQ(hilb_integral(3, {}), t_term(Rational(1, 6), -6));
    EXPECT_TRUE(hilb_integral(5, {1}).is_zero());
    EXPECT_EQ(hilb_integral(4, {2}), t_term(Rational(-1, 8), -6));
    EXPECT_EQ(hilb_integral(2, {4}), t_term(Rational(-1, 16), 0));
    EXPECT_EQ(hilb_integral(1, {}), t_term(Rational(1), -2));
}

TEST(Localization, FrozenTable)
{
    // <ch_k>_n / t^(k-2n) for k = 2..6, computed independently.
    const std::vector<std::vector<Rational>> table = {
        {Rational(0), Rational(0), Rational(0), Rational(0), Rational(0)},
        {Rational(-1, 4), Rational(1, 6), Rational(-1, 16), Rational(1, 60), Rational(-1, 288)},
        {Rational(-1, 4), Rational(1, 6), Rational(-5, 144), Rational(-1, 60), Rational(77, 4320)},
        {Rational(-1, 8), Rational(1, 12), Rational(-1, 288), Rational(-1, 40), Rational(77, 4320)},
        {Rational(-1, 24), Rational(1, 36), Rational(1, 288), Rational(-1, 72), Rational(1, 120)},
    };
    for (int n = 1; n <= 5; ++n)
        for (int k = 2; k <= 6; ++k)
            EXPECT_EQ(hilb_integral(n, {k}),
                      t_term(table[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 2)], k - 2 * n))
                << "n=" << n << " k=" << k;
}

TEST(Localization, NormalizationAndDegreeZeroInsertions)
{
    for (int n = 1; n <= 10; ++n) {
        const LaurentPoly one = hilb_integral(n, {});
        EXPECT_EQ(one, t_term(Rational::factorial(n).inverse(), -2 * n)) << n;
        EXPECT_EQ(hilb_integral(n, {0}), one * Rational(n)) << n;
        EXPECT_TRUE(hilb_integral(n, {1}).is_zero()) << n;
    }
}

TEST(Localization, ParallelMatchesSequential)
{
    for (int n = 1; n <= 7; ++n) {
        const InsertionList ks{2, 3};
        EXPECT_EQ(hilb_integral(n, ks, Execution::parallel), hilb_integral(n, ks, Execution::sequential));
    }
}

TEST(Localization, FullTorusAgreesOnRandomLists)
{
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> nd(1, 5), len(0, 3), kd(0, 5);
    for (int i = 0; i < 25; ++i) {
        const int n = nd(rng);
        std::vector<int> ks;
        for (int j = len(rng); j > 0; --j)
            ks.push_back(kd(rng));
        const InsertionList list(ks);
        EXPECT_EQ(full_torus_diagonal(n, list), hilb_integral(n, list)) << n << " " << list.to_string();
    }
}

TEST(Localization, FullTorusSymmetricUnderTranspose)
{
    for (const auto& lambda : enumerate_partitions(5)) {
        const auto a = full_torus_contribution(lambda.conjugate(), {2, 3});
        const auto b = full_torus_contribution(lambda, {2, 3}).swapped();
        EXPECT_EQ(a.numerator, b.numerator);
        EXPECT_EQ(a.denominator, b.denominator);
    }
}

TEST(Localization, InsertionListRendering)
{
    EXPECT_EQ(InsertionList({3, 2}).to_string(), "ch_2*ch_3");
    EXPECT_EQ(InsertionList({}).to_string(), "1");
    EXPECT_EQ(InsertionList({3, 2}).total_degree(), 5);
    EXPECT_THROW(InsertionList({-1}), error);
    EXPECT_THROW(hilb_integral(0, {}), error);
}
