#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>

#include "hilbwc/exact/bivar_poly.hpp"

namespace hilbwc {

/// Truncated Laurent series in eps whose coefficients are Laurent polynomials
/// in t. This is the carrier for the diagonal specialization t1 = t,
/// t2 = t + eps.
///
/// `min_exp` is a declared lower bound on the eps-exponents present and
/// `trunc_order` is the highest eps-exponent that is known; coefficients above
/// it are unknown. An empty `trunc_order` marks an exact (finite) series.
class EpsSeries {
public:
    using Coefficients = std::map<int, LaurentPoly>;

    EpsSeries() = default;

    static EpsSeries exact(Coefficients coeffs, int min_exp = 0)
    {
        EpsSeries s;
        s.min_exp_ = min_exp;
        for (auto& [e, c] : coeffs) {
            if (e < min_exp)
                detail::fail("eps-series coefficient below declared min_exp");
            if (!c.is_zero())
                s.coeffs_.emplace(e, std::move(c));
        }
        return s;
    }

    static EpsSeries constant(const LaurentPoly& c) { return exact({{0, c}}); }

    /// Expands p(t, t + eps) exactly.
    static EpsSeries from_diagonal_shift(const BivarPoly& p)
    {
        Coefficients coeffs;
        for (const auto& [e, c] : p.terms()) {
            const auto [e1, e2] = e;
            for (int j = 0; j <= e2; ++j) {
                auto [it, ok] = coeffs.try_emplace(j, LaurentPoly(Variable::t));
                it->second.add_term(e1 + e2 - j, c * Rational::binomial(e2, j));
            }
        }
        return exact(std::move(coeffs));
    }

    int min_exp() const { return min_exp_; }
    const std::optional<int>& trunc_order() const { return trunc_; }
    bool is_exact() const { return !trunc_.has_value(); }
    const Coefficients& coefficients() const { return coeffs_; }

    bool is_known(int exp) const { return !trunc_ || exp <= *trunc_; }

    LaurentPoly coeff(int exp) const
    {
        if (!is_known(exp))
            detail::fail("eps-series coefficient " + std::to_string(exp) + " lies beyond the truncation order " +
                         std::to_string(*trunc_));
        auto it = coeffs_.find(exp);
        return it == coeffs_.end() ? LaurentPoly(Variable::t) : it->second;
    }

    /// True when every coefficient of a negative eps power vanishes.
    bool is_regular() const { return coeffs_.empty() || coeffs_.begin()->first >= 0; }

    /// Drops every term above `order` and records the new truncation.
    EpsSeries truncated(int order) const
    {
        EpsSeries s;
        s.min_exp_ = std::min(min_exp_, order);
        s.trunc_ = trunc_ ? std::min(*trunc_, order) : order;
        for (const auto& [e, c] : coeffs_)
            if (e <= *s.trunc_)
                s.coeffs_.emplace(e, c);
        return s;
    }

    std::string to_string() const
    {
        std::string out;
        for (const auto& [e, c] : coeffs_) {
            std::string term = "(" + c.to_string() + ")";
            if (e != 0)
                term += "*eps^" + std::to_string(e);
            detail::append_term(out, term);
        }
        if (out.empty())
            out = "0";
        if (trunc_)
            out += " + O(eps^" + std::to_string(*trunc_ + 1) + ")";
        return out;
    }

    EpsSeries& operator+=(const EpsSeries& o)
    {
        min_exp_ = std::min(min_exp_, o.min_exp_);
        if (o.trunc_)
            trunc_ = trunc_ ? std::min(*trunc_, *o.trunc_) : *o.trunc_;
        for (const auto& [e, c] : o.coeffs_) {
            auto [it, ok] = coeffs_.try_emplace(e, LaurentPoly(Variable::t));
            it->second += c;
        }
        prune();
        return *this;
    }

    EpsSeries& operator*=(const Rational& s)
    {
        for (auto& [e, c] : coeffs_)
            c *= s;
        prune();
        return *this;
    }

    friend EpsSeries operator+(EpsSeries a, const EpsSeries& b) { return a += b; }

    /// Product with pessimistic truncation: each operand's budget is shifted by
    /// its partner's min_exp, and the smaller wins.
    friend EpsSeries operator*(const EpsSeries& a, const EpsSeries& b)
    {
        EpsSeries r;
        r.min_exp_ = detail::checked_add(a.min_exp_, b.min_exp_);
        if (a.trunc_)
            r.trunc_ = detail::checked_add(*a.trunc_, b.min_exp_);
        if (b.trunc_) {
            const int tb = detail::checked_add(*b.trunc_, a.min_exp_);
            r.trunc_ = r.trunc_ ? std::min(*r.trunc_, tb) : tb;
        }
        for (const auto& [e1, c1] : a.coeffs_) {
            for (const auto& [e2, c2] : b.coeffs_) {
                const int e = detail::checked_add(e1, e2);
                if (r.trunc_ && e > *r.trunc_)
                    break;
                auto [it, ok] = r.coeffs_.try_emplace(e, LaurentPoly(Variable::t));
                it->second += c1 * c2;
            }
        }
        r.prune();
        return r;
    }

private:
    void prune()
    {
        std::erase_if(coeffs_, [](const auto& kv) { return kv.second.is_zero(); });
    }

    Coefficients coeffs_;
    int min_exp_ = 0;
    std::optional<int> trunc_;
};

/// Inverse of the linear factor c0 + c1*eps. With c0 != 0 (a monomial in t)
/// this is (1/c0) * sum_j (-c1*eps/c0)^j truncated at `budget`; with c0 == 0
/// it is exactly eps^-1 / c1.
inline EpsSeries eps_invert(const LaurentPoly& c0, const Rational& c1, int budget)
{
    if (budget < 0)
        detail::fail("eps_invert budget must be nonnegative");
    if (c0.is_zero()) {
        if (c1.is_zero())
            detail::fail("eps_invert of the zero factor");
        return EpsSeries::exact({{-1, LaurentPoly(c1.inverse(), Variable::t)}}, -1);
    }
    const LaurentPoly inv = c0.inverse();
    const LaurentPoly ratio = inv * (-c1);
    EpsSeries::Coefficients coeffs;
    LaurentPoly term = inv;
    for (int j = 0; j <= budget; ++j) {
        coeffs.emplace(j, term);
        term *= ratio;
    }
    return EpsSeries::exact(std::move(coeffs)).truncated(budget);
}

} // namespace hilbwc
