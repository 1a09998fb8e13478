#pragma once

#include <algorithm>
#include <future>
#include <numeric>
#include <string>
#include <vector>

#include "hilbwc/exact/eps_series.hpp"
#include "hilbwc/hilb/fixed_point.hpp"

namespace hilbwc {

/// Multiset of Chern-character insertions ch_{k_1} ... ch_{k_m}, kept sorted.
class InsertionList {
public:
    InsertionList() = default;
    InsertionList(std::initializer_list<int> ks) : InsertionList(std::vector<int>(ks)) {}
    explicit InsertionList(std::vector<int> ks) : ks_(std::move(ks))
    {
        for (int k : ks_)
            if (k < 0)
                detail::fail("ch_k insertion needs k >= 0");
        std::sort(ks_.begin(), ks_.end());
    }

    const std::vector<int>& ks() const { return ks_; }
    bool empty() const { return ks_.empty(); }
    std::size_t size() const { return ks_.size(); }
    int total_degree() const { return std::accumulate(ks_.begin(), ks_.end(), 0); }

    std::string to_string() const
    {
        if (ks_.empty())
            return "1";
        std::string s;
        for (int k : ks_) {
            if (!s.empty())
                s += "*";
            s += "ch_" + std::to_string(k);
        }
        return s;
    }

    friend bool operator==(const InsertionList&, const InsertionList&) = default;

private:
    std::vector<int> ks_;
};

enum class Execution { sequential, parallel };

/// Product of the insertions at a fixed point, as a polynomial in t1, t2.
inline BivarPoly insertion_value(const Partition& lambda, const InsertionList& ks)
{
    BivarPoly v(Rational(1));
    for (int k : ks.ks())
        v *= ch_value(lambda, k);
    return v;
}

/// Contribution prod ch(lambda) / e(T_lambda) under t1 = t, t2 = t + eps.
/// Factors that vanish on the diagonal become exact eps^-1 poles; the others
/// are inverted to the pole count, so the eps^0 coefficient is exact.
inline EpsSeries fixed_point_contribution(const Partition& lambda, const InsertionList& ks)
{
    const auto data = fixed_point_data(lambda);
    const int poles = static_cast<int>(
        std::count_if(data->tangent.begin(), data->tangent.end(), [](Weight w) { return w.a + w.b == 0; }));

    EpsSeries regular = EpsSeries::constant(LaurentPoly(Rational(1)));
    EpsSeries singular = EpsSeries::constant(LaurentPoly(Rational(1)));
    for (const Weight& w : data->tangent) {
        const auto inv = eps_invert(LaurentPoly::monomial(Rational(w.a + w.b), 1), Rational(w.b), poles);
        if (w.a + w.b == 0)
            singular = singular * inv;
        else
            regular = regular * inv;
    }
    return EpsSeries::from_diagonal_shift(insertion_value(lambda, ks)) * regular * singular;
}

/// Sum of all fixed-point contributions for Hilb_n(C^2), before taking eps -> 0.
inline EpsSeries localization_sum(int n, const InsertionList& ks, Execution exec = Execution::sequential)
{
    if (n < 1)
        detail::fail("localization needs n >= 1");
    const auto partitions = enumerate_partitions(n);
    EpsSeries total;
    if (exec == Execution::parallel) {
        std::vector<std::future<EpsSeries>> parts;
        parts.reserve(partitions.size());
        for (const auto& lambda : partitions)
            parts.push_back(std::async(std::launch::async, [&lambda, &ks] { return fixed_point_contribution(lambda, ks); }));
        for (auto& f : parts)
            total += f.get();
    } else {
        for (const auto& lambda : partitions)
            total += fixed_point_contribution(lambda, ks);
    }
    return total;
}

/// Equivariant integral of the insertions over Hilb_n(C^2) for the diagonal
/// torus, as a Laurent polynomial in t. Always zero or homogeneous of degree
/// sum(k) - 2n.
inline LaurentPoly hilb_integral(int n, const InsertionList& ks, Execution exec = Execution::sequential)
{
    const EpsSeries sum = localization_sum(n, ks, exec);
    if (!sum.is_regular())
        throw regularity_error("localization sum not regular on diagonal (n=" + std::to_string(n) + ", " +
                               ks.to_string() + ")");
    LaurentPoly value = sum.coeff(0);
    const int degree = ks.total_degree() - 2 * n;
    if (!value.is_homogeneous_of_degree(degree))
        detail::fail("localization result is not homogeneous of degree " + std::to_string(degree));
    return value;
}

} // namespace hilbwc
