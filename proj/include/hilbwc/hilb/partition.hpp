#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "hilbwc/error.hpp"

namespace hilbwc {

/// Cell of a Young diagram, 0-based: row r holds columns 0..parts[r]-1.
struct Box {
    int row = 0;
    int col = 0;
    friend bool operator==(const Box&, const Box&) = default;
};

/// Integer partition, stored as a weakly decreasing list of positive parts.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                detail::fail("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                detail::fail("partition parts must be weakly decreasing");
        }
        size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    bool contains(Box b) const
    {
        return b.row >= 0 && b.col >= 0 && b.row < length() && b.col < parts_[static_cast<std::size_t>(b.row)];
    }

    Partition conjugate() const
    {
        std::vector<int> c(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j)
                ++c[static_cast<std::size_t>(j)];
        return Partition(std::move(c));
    }

    /// Boxes in row-major order.
    std::vector<Box> boxes() const
    {
        std::vector<Box> out;
        out.reserve(static_cast<std::size_t>(size_));
        for (int r = 0; r < length(); ++r)
            for (int c = 0; c < parts_[static_cast<std::size_t>(r)]; ++c)
                out.push_back({r, c});
        return out;
    }

    /// "(3,1)"; the empty partition renders as "()".
    std::string to_string() const
    {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i)
                s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// All partitions of n in reverse-lexicographic order: (n), (n-1,1), ..., (1^n).
inline std::vector<Partition> enumerate_partitions(int n)
{
    if (n < 0)
        detail::fail("cannot enumerate partitions of a negative integer");
    std::vector<Partition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> cur{n};
    while (true) {
        out.emplace_back(cur);
        // Rightmost part larger than 1.
        int i = static_cast<int>(cur.size()) - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == 1)
            --i;
        if (i < 0)
            break;
        int rest = static_cast<int>(cur.size()) - i; // ones after i, plus the unit taken from cur[i]
        const int v = --cur[static_cast<std::size_t>(i)];
        cur.resize(static_cast<std::size_t>(i) + 1);
        while (rest > 0) {
            cur.push_back(std::min(v, rest));
            rest -= cur.back();
        }
    }
    return out;
}

struct ArmLeg {
    int arm = 0;
    int leg = 0;
    friend bool operator==(const ArmLeg&, const ArmLeg&) = default;
};

/// Arm = boxes to the right of b in its row, leg = boxes below it in its column.
inline ArmLeg arm_leg(const Partition& lambda, Box b)
{
    if (!lambda.contains(b))
        detail::fail("box (" + std::to_string(b.row) + "," + std::to_string(b.col) + ") is outside " +
                     lambda.to_string());
    const auto& parts = lambda.parts();
    int below = 0;
    for (int r = b.row + 1; r < lambda.length() && parts[static_cast<std::size_t>(r)] > b.col; ++r)
        ++below;
    return {parts[static_cast<std::size_t>(b.row)] - b.col - 1, below};
}

} // namespace hilbwc
