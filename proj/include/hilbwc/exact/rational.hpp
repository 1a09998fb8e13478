#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "hilbwc/error.hpp"

namespace hilbwc {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Thin value wrapper around GMP's mpq_class.
class Rational {
public:
    Rational() = default;
    Rational(int v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(long v) : value_(v) {} // NOLINT(google-explicit-constructor)
    Rational(long long v) : value_(static_cast<long>(v)) {} // NOLINT

    Rational(long num, long den)
    {
        if (den == 0)
            detail::fail("rational with zero denominator");
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }

    explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }
    explicit Rational(const mpz_class& v) : value_(v) {}

    /// Parses "p" or "p/q" (optionally signed). Throws on malformed input.
    static Rational parse(std::string_view text)
    {
        std::string s(text);
        mpq_class v;
        if (s.empty() || v.set_str(s, 10) != 0)
            detail::fail("malformed rational '" + s + "'");
        if (v.get_den() == 0)
            detail::fail("rational with zero denominator");
        v.canonicalize();
        return Rational(std::move(v));
    }

    static Rational factorial(int k)
    {
        if (k < 0)
            detail::fail("factorial of a negative integer");
        mpz_class r;
        mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
        return Rational(r);
    }

    static Rational binomial(int n, int k)
    {
        if (k < 0 || n < 0 || k > n)
            return Rational(0);
        mpz_class r;
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        return Rational(r);
    }

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& gmp() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational inverse() const
    {
        if (is_zero())
            detail::fail("division by zero");
        return Rational(mpq_class(1) / value_);
    }

    /// Integer power; negative exponents require a nonzero base.
    Rational pow(int e) const
    {
        if (e < 0)
            return inverse().pow(-e);
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(e));
        return Rational(mpq_class(num, den));
    }

    /// "p" when the denominator is 1, "p/q" otherwise.
    std::string to_string() const
    {
        if (value_.get_den() == 1)
            return value_.get_num().get_str();
        return value_.get_num().get_str() + "/" + value_.get_den().get_str();
    }

    Rational operator-() const { return Rational(mpq_class(-value_)); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o)
    {
        if (o.is_zero())
            detail::fail("division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        return cmp(a.value_, b.value_) <=> 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    mpq_class value_{0};
};

enum class ArithOp { add, sub, mul, div };

inline Rational rat_arith(const Rational& a, const Rational& b, ArithOp op)
{
    switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
    }
    detail::fail("unknown arithmetic operation");
}

} // namespace hilbwc
