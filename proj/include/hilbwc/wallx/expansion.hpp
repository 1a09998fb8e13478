#pragma once

#include <string>
#include <vector>

#include "hilbwc/exact/rational.hpp"

namespace hilbwc {

/// The wall eps0 = 1/n0.
struct WallSpec {
    int n0 = 1;
};

/// One summand of the wall-crossing formula at a single wall: k I-functions of
/// n0 points each, insertions split into retained ones and k ordered blocks.
struct WallTerm {
    int k = 1;
    std::vector<int> retained;
    std::vector<std::vector<int>> blocks;
    int n_prime = 0;
    Rational symmetry_factor; // 1/k!

    friend bool operator==(const WallTerm&, const WallTerm&) = default;
};

/// One summand after crossing every wall: an ordered partition of n into
/// positive block sizes, each block carrying its own insertions.
struct FullCrossingTerm {
    std::vector<int> sizes;
    std::vector<std::vector<int>> insertions;
    Rational symmetry_factor; // 1/k!

    friend bool operator==(const FullCrossingTerm&, const FullCrossingTerm&) = default;
};

namespace detail {

/// Calls visit(slot_of) for every map {0..m-1} -> {0..slots-1}, in
/// lexicographic order of the slot vector.
template <typename Visit>
void for_each_assignment(int m, int slots, Visit&& visit)
{
    std::vector<int> slot_of(static_cast<std::size_t>(m), 0);
    while (true) {
        visit(slot_of);
        int i = m - 1;
        while (i >= 0 && slot_of[static_cast<std::size_t>(i)] == slots - 1)
            slot_of[static_cast<std::size_t>(i--)] = 0;
        if (i < 0)
            return;
        ++slot_of[static_cast<std::size_t>(i)];
    }
}

/// Compositions of n (ordered partitions into positive parts), lexicographic.
inline std::vector<std::vector<int>> compositions(int n)
{
    std::vector<std::vector<int>> out;
    if (n <= 0)
        return out;
    // Bit i of mask set means "cut after position i+1".
    for (unsigned long mask = 0; mask < (1UL << (n - 1)); ++mask) {
        std::vector<int> parts;
        int run = 1;
        for (int i = 0; i < n - 1; ++i) {
            if (mask & (1UL << (n - 2 - i))) {
                parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        parts.push_back(run);
        out.push_back(std::move(parts));
    }
    return out;
}

} // namespace detail

/// All summands at the wall 1/n0 for a bracket of n points and
/// `num_insertions` insertions, k = 1..floor(n/n0).
inline std::vector<WallTerm> expand_wall_terms(int n, int num_insertions, WallSpec wall)
{
    if (wall.n0 < 1 || wall.n0 > n)
        detail::fail("wall n0=" + std::to_string(wall.n0) + " outside 1.." + std::to_string(n));
    if (num_insertions < 0)
        detail::fail("number of insertions must be nonnegative");
    std::vector<WallTerm> out;
    for (int k = 1; k * wall.n0 <= n; ++k) {
        const Rational factor = Rational::factorial(k).inverse();
        detail::for_each_assignment(num_insertions, k + 1, [&](const std::vector<int>& slot_of) {
            WallTerm term{k, {}, std::vector<std::vector<int>>(static_cast<std::size_t>(k)), n - k * wall.n0, factor};
            for (int i = 0; i < num_insertions; ++i) {
                const int s = slot_of[static_cast<std::size_t>(i)];
                if (s == 0)
                    term.retained.push_back(i);
                else
                    term.blocks[static_cast<std::size_t>(s - 1)].push_back(i);
            }
            out.push_back(std::move(term));
        });
    }
    return out;
}

/// All summands of the full crossing from Hilb_n to FM_n.
inline std::vector<FullCrossingTerm> expand_full_crossing(int n, int num_insertions)
{
    if (n < 1)
        detail::fail("full crossing needs n >= 1");
    if (num_insertions < 0)
        detail::fail("number of insertions must be nonnegative");
    std::vector<FullCrossingTerm> out;
    for (auto& sizes : detail::compositions(n)) {
        const int k = static_cast<int>(sizes.size());
        const Rational factor = Rational::factorial(k).inverse();
        detail::for_each_assignment(num_insertions, k, [&](const std::vector<int>& slot_of) {
            FullCrossingTerm term{sizes, std::vector<std::vector<int>>(static_cast<std::size_t>(k)), factor};
            for (int i = 0; i < num_insertions; ++i)
                term.insertions[static_cast<std::size_t>(slot_of[static_cast<std::size_t>(i)])].push_back(i);
            out.push_back(std::move(term));
        });
    }
    return out;
}

} // namespace hilbwc
