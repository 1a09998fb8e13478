#include <random>

#include <gtest/gtest.h>

#include "hilbwc/exact.hpp"

using namespace hilbwc;

namespace {

LaurentPoly t_pow(long c, int e) { return LaurentPoly::monomial(Rational(c), e); }

LaurentPoly random_poly(std::mt19937& rng)
{
    std::uniform_int_distribution<int> len(0, 4), exp(-5, 5), num(-9, 9), den(1, 6);
    LaurentPoly p;
    for (int i = len(rng); i > 0; --i)
        p.add_term(exp(rng), Rational(num(rng), den(rng)));
    return p;
}

} // namespace

TEST(Rational, Arithmetic)
{
    EXPECT_EQ(rat_arith(Rational(1, 2), Rational(1, 3), ArithOp::add), Rational(5, 6));
    EXPECT_EQ(rat_arith(Rational(-1, 4), Rational(4), ArithOp::mul), Rational(-1));
    EXPECT_EQ(rat_arith(Rational(7, 3), Rational(7, 3), ArithOp::div), Rational(1));
    EXPECT_EQ(rat_arith(Rational(1, 2), Rational(1, 2), ArithOp::sub), Rational(0));
}

TEST(Rational, CanonicalForm)
{
    const Rational r(6, -4);
    EXPECT_EQ(r.numerator(), -3);
    EXPECT_EQ(r.denominator(), 2);
    EXPECT_EQ(r.to_string(), "-3/2");
    EXPECT_EQ(Rational(0, 5).to_string(), "0");
    EXPECT_EQ(Rational(0, 5).denominator(), 1);
    EXPECT_EQ(Rational(10, 5).to_string(), "2");
    EXPECT_EQ(Rational::parse("-12/8"), Rational(-3, 2));
}

TEST(Rational, Errors)
{
    EXPECT_THROW(rat_arith(Rational(1), Rational(0), ArithOp::div), error);
    EXPECT_THROW(Rational(1, 0), error);
    EXPECT_THROW(Rational(0).inverse(), error);
    EXPECT_THROW(Rational::parse("1/x"), error);
}

TEST(Rational, Combinatorics)
{
    EXPECT_EQ(Rational::factorial(0), Rational(1));
    EXPECT_EQ(Rational::factorial(10), Rational(3628800));
    EXPECT_EQ(Rational::binomial(6, 2), Rational(15));
    EXPECT_EQ(Rational::binomial(2, 5), Rational(0));
    EXPECT_EQ(Rational(2, 3).pow(-2), Rational(9, 4));
}

TEST(LaurentPoly, Arithmetic)
{
    EXPECT_EQ(lp_arith(t_pow(1, -2), t_pow(1, 3), PolyOp::mul), t_pow(1, 1));
    const LaurentPoly t = t_pow(1, 1);
    const LaurentPoly diff = lp_arith(t, t, PolyOp::sub);
    EXPECT_TRUE(diff.is_zero());
    EXPECT_TRUE(diff.terms().empty());
    const LaurentPoly one_plus_t = t_pow(1, 0) + t;
    EXPECT_EQ(one_plus_t.pow(2).to_string(), "1 + 2*t + t^2");
}

TEST(LaurentPoly, VariableMismatch)
{
    const LaurentPoly a = LaurentPoly::monomial(Rational(1), 1, Variable::t);
    const LaurentPoly b = LaurentPoly::monomial(Rational(1), 1, Variable::q);
    EXPECT_THROW(lp_arith(a, b, PolyOp::add), error);
    EXPECT_THROW(a * b, error);
}

TEST(LaurentPoly, ExponentOverflowIsAnError)
{
    const LaurentPoly big = t_pow(1, std::numeric_limits<int>::max());
    EXPECT_THROW(big * t_pow(1, 1), error);
}

TEST(LaurentPoly, Rendering)
{
    LaurentPoly p;
    p.add_term(-4, Rational(-1, 4));
    p.add_term(0, Rational(2));
    p.add_term(1, Rational(-1));
    EXPECT_EQ(p.to_string(), "-1/4*t^-4 + 2 - t");
    EXPECT_EQ(LaurentPoly().to_string(), "0");
}

TEST(LaurentPoly, RingAxiomsOnRandomSamples)
{
    std::mt19937 rng(11);
    for (int i = 0; i < 200; ++i) {
        const auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a + b, b + a);
        EXPECT_TRUE((a - a).is_zero());
    }
}

TEST(BivarPoly, LinearFormsAndDiagonal)
{
    const BivarPoly w = BivarPoly::linear(2, -1); // 2 t1 - t2
    EXPECT_EQ(w.homogeneous_degree(), 1);
    EXPECT_EQ(w.pow(2).coeff(1, 1), Rational(-4));
    EXPECT_EQ(w.pow(3).diagonal(), t_pow(1, 3));
    EXPECT_EQ(w.swapped(), BivarPoly::linear(-1, 2));
    EXPECT_THROW(BivarPoly::monomial(Rational(1), -1, 0), error);
}

TEST(BivarPoly, SubstituteLinear)
{
    // (t1 + t2)|_{t1=s, t2=s+h} = 2s + h
    EXPECT_EQ(BivarPoly::linear(1, 1).substitute_linear(1, 0, 1, 1), BivarPoly::linear(2, 1));
}

TEST(EpsSeries, InvertRegularFactor)
{
    const auto s = eps_invert(t_pow(2, 1), Rational(0), 2);
    EXPECT_EQ(s.coeff(0), LaurentPoly::monomial(Rational(1, 2), -1));
    EXPECT_TRUE(s.coeff(1).is_zero());
    EXPECT_TRUE(s.coeff(2).is_zero());
}

TEST(EpsSeries, InvertPureEpsFactor)
{
    const auto s = eps_invert(LaurentPoly(), Rational(1), 2);
    EXPECT_EQ(s.min_exp(), -1);
    EXPECT_TRUE(s.is_exact());
    EXPECT_EQ(s.coeff(-1), t_pow(1, 0));
    EXPECT_FALSE(s.is_regular());
}

TEST(EpsSeries, InvertMixedFactor)
{
    // 1/(t + eps) = t^-1 - t^-2 eps + O(eps^2)
    const auto s = eps_invert(t_pow(1, 1), Rational(1), 1);
    EXPECT_EQ(s.coeff(0), t_pow(1, -1));
    EXPECT_EQ(s.coeff(1), t_pow(-1, -2));
    EXPECT_EQ(s.trunc_order(), 1);
    EXPECT_THROW(s.coeff(2), error);
}

TEST(EpsSeries, InvertErrors)
{
    EXPECT_THROW(eps_invert(LaurentPoly(), Rational(0), 1), error);
    EXPECT_THROW(eps_invert(t_pow(1, 1), Rational(1), -1), error);
}

TEST(EpsSeries, InverseTimesFactorIsOneToBudget)
{
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> coef(-5, 5), ex(-3, 3), budget(0, 6);
    for (int i = 0; i < 100; ++i) {
        const int c0 = coef(rng), e = ex(rng), c1 = coef(rng), b = budget(rng);
        if (c0 == 0 && c1 == 0)
            continue;
        const LaurentPoly lead = t_pow(c0, e);
        const EpsSeries factor = EpsSeries::exact({{0, lead}, {1, LaurentPoly(Rational(c1))}});
        const EpsSeries prod = eps_invert(lead, Rational(c1), b) * factor;
        const int known = *prod.trunc_order();
        EXPECT_GE(known, c0 == 0 ? 0 : b);
        for (int j = prod.min_exp(); j <= known; ++j)
            EXPECT_EQ(prod.coeff(j), j == 0 ? t_pow(1, 0) : LaurentPoly()) << "j=" << j;
    }
}

TEST(EpsSeries, ProductTracksWeakerTruncation)
{
    const EpsSeries pole = eps_invert(LaurentPoly(), Rational(2), 0);       // eps^-1 / 2, exact
    const EpsSeries reg = eps_invert(t_pow(3, 1), Rational(1), 2);           // known to eps^2
    const EpsSeries prod = pole * reg;
    EXPECT_EQ(prod.min_exp(), -1);
    EXPECT_EQ(prod.trunc_order(), 1);
    EXPECT_EQ(prod.coeff(-1), LaurentPoly::monomial(Rational(1, 6), -1));
}

TEST(EpsSeries, DiagonalShiftExpansion)
{
    // t1 * t2^2 at t1 = t, t2 = t + eps: t^3 + 2 t^2 eps + t eps^2
    const auto s = EpsSeries::from_diagonal_shift(BivarPoly::monomial(Rational(1), 1, 2));
    EXPECT_EQ(s.coeff(0), t_pow(1, 3));
    EXPECT_EQ(s.coeff(1), t_pow(2, 2));
    EXPECT_EQ(s.coeff(2), t_pow(1, 1));
    EXPECT_TRUE(s.coeff(3).is_zero());
}
