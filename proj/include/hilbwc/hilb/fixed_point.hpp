#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "hilbwc/exact/bivar_poly.hpp"
#include "hilbwc/hilb/partition.hpp"

namespace hilbwc {

/// The character a*t1 + b*t2 of the two-dimensional torus.
struct Weight {
    int a = 0;
    int b = 0;

    bool is_zero() const { return a == 0 && b == 0; }
    Weight swapped() const { return {b, a}; }
    BivarPoly as_poly() const { return BivarPoly::linear(a, b); }

    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight&, const Weight&) = default;
};

/// Tangent weights of Hilb_n(C^2) at the fixed point lambda: for each box with
/// arm a and leg l, the pair (a+1)*t1 - l*t2 and -a*t1 + (l+1)*t2. The arm
/// runs along t1, matching the monomial labelling x^col y^row.
inline std::vector<Weight> tangent_weights(const Partition& lambda)
{
    std::vector<Weight> w;
    w.reserve(2 * static_cast<std::size_t>(lambda.size()));
    for (const Box& b : lambda.boxes()) {
        const auto [arm, leg] = arm_leg(lambda, b);
        w.push_back({arm + 1, -leg});
        w.push_back({-arm, leg + 1});
    }
    return w;
}

/// Monomial labels (col, row) of the boxes, i.e. x^col y^row spans O/I_lambda.
/// The torus acts on the fibre of V through the duals -(col*t1 + row*t2).
inline std::vector<Weight> taut_weights(const Partition& lambda)
{
    std::vector<Weight> w;
    w.reserve(static_cast<std::size_t>(lambda.size()));
    for (const Box& b : lambda.boxes())
        w.push_back({b.col, b.row});
    return w;
}

struct FixedPointData {
    Partition partition;
    std::vector<Weight> tangent;
    std::vector<Weight> taut;
};

namespace detail {

/// Process-wide memo of fixed-point data and Chern characters. Readers share
/// the lock; entries are never evicted and never mutated after insertion.
class FixedPointCache {
public:
    static FixedPointCache& instance()
    {
        static FixedPointCache cache;
        return cache;
    }

    std::shared_ptr<const FixedPointData> data(const Partition& lambda)
    {
        {
            std::shared_lock lock(mutex_);
            if (auto it = data_.find(lambda); it != data_.end())
                return it->second;
        }
        auto d = std::make_shared<const FixedPointData>(
            FixedPointData{lambda, tangent_weights(lambda), taut_weights(lambda)});
        std::unique_lock lock(mutex_);
        return data_.try_emplace(lambda, std::move(d)).first->second;
    }

    template <typename Compute>
    BivarPoly ch(const Partition& lambda, int k, Compute&& compute)
    {
        const auto key = std::make_pair(lambda, k);
        {
            std::shared_lock lock(mutex_);
            if (auto it = ch_.find(key); it != ch_.end())
                return it->second;
        }
        BivarPoly v = compute();
        std::unique_lock lock(mutex_);
        return ch_.try_emplace(key, std::move(v)).first->second;
    }

private:
    std::shared_mutex mutex_;
    std::map<Partition, std::shared_ptr<const FixedPointData>> data_;
    std::map<std::pair<Partition, int>, BivarPoly> ch_;
};

} // namespace detail

inline std::shared_ptr<const FixedPointData> fixed_point_data(const Partition& lambda)
{
    return detail::FixedPointCache::instance().data(lambda);
}

/// ch_k(V) at lambda: sum over boxes of w^k / k!, with w = -(col*t1 + row*t2).
inline BivarPoly ch_value(const Partition& lambda, int k)
{
    if (k < 0)
        detail::fail("ch_k needs k >= 0");
    return detail::FixedPointCache::instance().ch(lambda, k, [&] {
        BivarPoly sum;
        for (const Weight& w : fixed_point_data(lambda)->taut)
            sum += BivarPoly::linear(-w.a, -w.b).pow(k);
        return sum * Rational::factorial(k).inverse();
    });
}

} // namespace hilbwc
