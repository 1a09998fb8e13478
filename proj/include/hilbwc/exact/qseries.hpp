#pragma once

#include <algorithm>
#include <string>
#include <type_traits>
#include <vector>

#include "hilbwc/exact/laurent_poly.hpp"

namespace hilbwc {

namespace detail {

template <typename C>
struct coeff_traits;

template <>
struct coeff_traits<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& c) { return c.is_zero(); }
    static bool is_one(const Rational& c) { return c.is_one(); }
    static Rational inverse(const Rational& c) { return c.inverse(); }
    static std::string render(const Rational& c) { return c.to_string(); }
};

template <>
struct coeff_traits<LaurentPoly> {
    static LaurentPoly zero() { return LaurentPoly(Variable::t); }
    static LaurentPoly one() { return LaurentPoly(Rational(1), Variable::t); }
    static bool is_zero(const LaurentPoly& c) { return c.is_zero(); }
    static bool is_one(const LaurentPoly& c) { return c == one(); }
    static LaurentPoly inverse(const LaurentPoly& c) { return c.inverse(); }
    static std::string render(const LaurentPoly& c) { return c.to_string(); }
};

} // namespace detail

/// Power series in q truncated after q^order. Coefficients are either plain
/// rationals or Laurent polynomials in t.
template <typename C>
class QSeries {
    using traits = detail::coeff_traits<C>;

public:
    using coefficient_type = C;

    explicit QSeries(int order = 0) : coeffs_(check_order(order) + 1, traits::zero()) {}

    QSeries(std::vector<C> coeffs, int order) : coeffs_(std::move(coeffs))
    {
        check_order(order);
        coeffs_.resize(static_cast<std::size_t>(order) + 1, traits::zero());
    }

    static QSeries constant(const C& c, int order)
    {
        QSeries s(order);
        s.coeffs_[0] = c;
        return s;
    }

    static QSeries one(int order) { return constant(traits::one(), order); }

    /// c * q^k, known through q^order.
    static QSeries monomial(const C& c, int k, int order)
    {
        QSeries s(order);
        if (k >= 0 && k <= order)
            s.coeffs_[static_cast<std::size_t>(k)] = c;
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<C>& coefficients() const { return coeffs_; }

    const C& operator[](int n) const
    {
        if (n < 0 || n > order())
            detail::fail("q-series coefficient " + std::to_string(n) + " outside known range 0.." +
                         std::to_string(order()));
        return coeffs_[static_cast<std::size_t>(n)];
    }

    C& operator[](int n)
    {
        if (n < 0 || n > order())
            detail::fail("q-series coefficient " + std::to_string(n) + " outside known range");
        return coeffs_[static_cast<std::size_t>(n)];
    }

    QSeries truncated(int order) const
    {
        check_order(order);
        QSeries s(std::min(order, this->order()));
        std::copy_n(coeffs_.begin(), s.coeffs_.size(), s.coeffs_.begin());
        return s;
    }

    /// q -> c*q.
    QSeries scaled_variable(const Rational& c) const
    {
        QSeries s = *this;
        Rational p(1);
        for (auto& x : s.coeffs_) {
            x *= p;
            p *= c;
        }
        return s;
    }

    std::string to_string() const
    {
        std::string out;
        for (int n = 0; n <= order(); ++n) {
            const C& c = coeffs_[static_cast<std::size_t>(n)];
            if (traits::is_zero(c))
                continue;
            std::string cs = traits::render(c);
            std::string term;
            if (n == 0)
                term = cs;
            else {
                std::string qp = n == 1 ? "q" : "q^" + std::to_string(n);
                if (traits::is_one(c))
                    term = qp;
                else if constexpr (std::is_same_v<C, Rational>)
                    term = (c == Rational(-1)) ? "-" + qp : cs + "*" + qp;
                else
                    term = "(" + cs + ")*" + qp;
            }
            detail::append_term(out, term);
        }
        if (out.empty())
            out = "0";
        return out + " + O(q^" + std::to_string(order() + 1) + ")";
    }

    QSeries operator-() const
    {
        QSeries s = *this;
        for (auto& c : s.coeffs_)
            c *= Rational(-1);
        return s;
    }

    QSeries& operator+=(const QSeries& o)
    {
        coeffs_.resize(static_cast<std::size_t>(std::min(order(), o.order())) + 1);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] += o.coeffs_[i];
        return *this;
    }

    QSeries& operator-=(const QSeries& o) { return *this += -o; }

    QSeries& operator*=(const Rational& s)
    {
        for (auto& c : coeffs_)
            c *= s;
        return *this;
    }

    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(QSeries a, const Rational& s) { return a *= s; }
    friend QSeries operator*(const Rational& s, QSeries a) { return a *= s; }

    /// Cauchy product, known through the smaller of the two orders.
    friend QSeries operator*(const QSeries& a, const QSeries& b)
    {
        const int ord = std::min(a.order(), b.order());
        QSeries r(ord);
        for (int i = 0; i <= ord; ++i) {
            if (traits::is_zero(a.coeffs_[static_cast<std::size_t>(i)]))
                continue;
            for (int j = 0; i + j <= ord; ++j) {
                if (traits::is_zero(b.coeffs_[static_cast<std::size_t>(j)]))
                    continue;
                r.coeffs_[static_cast<std::size_t>(i + j)] +=
                    a.coeffs_[static_cast<std::size_t>(i)] * b.coeffs_[static_cast<std::size_t>(j)];
            }
        }
        return r;
    }

    QSeries& operator*=(const QSeries& o) { return *this = *this * o; }

    /// Equality of the coefficients both sides know.
    friend bool operator==(const QSeries& a, const QSeries& b)
    {
        const int ord = std::min(a.order(), b.order());
        for (int i = 0; i <= ord; ++i)
            if (!(a.coeffs_[static_cast<std::size_t>(i)] == b.coeffs_[static_cast<std::size_t>(i)]))
                return false;
        return true;
    }

private:
    static int check_order(int order)
    {
        if (order < 0)
            detail::fail("q-series order must be nonnegative");
        return order;
    }

    std::vector<C> coeffs_;
};

using RationalSeries = QSeries<Rational>;
using LaurentSeries = QSeries<LaurentPoly>;

/// Multiplicative inverse; the constant term must be a unit.
template <typename C>
QSeries<C> qs_inverse(const QSeries<C>& s)
{
    using traits = detail::coeff_traits<C>;
    if (traits::is_zero(s[0]))
        detail::fail("q-series inverse needs an invertible constant term");
    const C inv0 = traits::inverse(s[0]);
    QSeries<C> r(s.order());
    r[0] = inv0;
    for (int n = 1; n <= s.order(); ++n) {
        C acc = traits::zero();
        for (int k = 1; k <= n; ++k)
            acc += s[k] * r[n - k];
        r[n] = -(inv0 * acc);
    }
    return r;
}

/// exp(s) for s with zero constant term, via n*g_n = sum_k k*s_k*g_{n-k}.
template <typename C>
QSeries<C> qs_exp(const QSeries<C>& s)
{
    using traits = detail::coeff_traits<C>;
    if (!traits::is_zero(s[0]))
        detail::fail("qs_exp requires a zero constant term");
    QSeries<C> g(s.order());
    g[0] = traits::one();
    for (int n = 1; n <= s.order(); ++n) {
        C acc = traits::zero();
        for (int k = 1; k <= n; ++k)
            acc += s[k] * g[n - k] * Rational(k);
        g[n] = acc * Rational(1, n);
    }
    return g;
}

/// log(s) for s with constant term 1, via n*f_n = n*s_n - sum_{k<n} k*f_k*s_{n-k}.
template <typename C>
QSeries<C> qs_log(const QSeries<C>& s)
{
    using traits = detail::coeff_traits<C>;
    if (!traits::is_one(s[0]))
        detail::fail("qs_log requires constant term 1");
    QSeries<C> f(s.order());
    for (int n = 1; n <= s.order(); ++n) {
        C acc = s[n] * Rational(n);
        for (int k = 1; k < n; ++k)
            acc -= f[k] * s[n - k] * Rational(k);
        f[n] = acc * Rational(1, n);
    }
    return f;
}

/// Integer power by repeated squaring; negative powers go through qs_inverse.
template <typename C>
QSeries<C> qs_pow_int(const QSeries<C>& s, int c)
{
    if (c < 0)
        return qs_pow_int(qs_inverse(s), -c);
    QSeries<C> result = QSeries<C>::one(s.order());
    QSeries<C> base = s;
    while (c > 0) {
        if (c & 1)
            result *= base;
        c >>= 1;
        if (c > 0)
            base *= base;
    }
    return result;
}

/// outer(inner(q)) for inner with zero constant term, by Horner's rule.
template <typename C>
QSeries<C> qs_compose(const QSeries<C>& outer, const QSeries<C>& inner)
{
    using traits = detail::coeff_traits<C>;
    if (!traits::is_zero(inner[0]))
        detail::fail("qs_compose requires an inner series with zero constant term");
    const int ord = std::min(outer.order(), inner.order());
    const QSeries<C> in = inner.truncated(ord);
    QSeries<C> r = QSeries<C>::constant(outer[ord], ord);
    for (int k = ord - 1; k >= 0; --k) {
        r = r * in;
        r[0] += outer[k];
    }
    return r;
}

} // namespace hilbwc
