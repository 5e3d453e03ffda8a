#ifndef RANEY_PATHS_HPP
#define RANEY_PATHS_HPP

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "raney/error.hpp"
#include "raney/threshold.hpp"

namespace raney {

// Lattice path from (0,0) given by its rises: up r >= 1, flat 0, or down
// -(k-1) <= r <= -1, never dipping below the x-axis.
class ExtMotzkinPath {
public:
    static ExtMotzkinPath make(std::int64_t k, std::vector<std::int64_t> rises) {
        detail::require_arity(k);
        std::int64_t y = 0;
        for (std::size_t i = 0; i < rises.size(); ++i) {
            const auto step = static_cast<std::int64_t>(i + 1);
            if (rises[i] < -(k - 1))
                throw error(errc::invalid_path,
                            "down step " + std::to_string(rises[i]) + " longer than k-1 = " + std::to_string(k - 1),
                            step);
            y = detail::checked_add(y, rises[i]);
            if (y < 0)
                throw error(errc::invalid_path, "path goes below the x-axis", step);
        }
        return ExtMotzkinPath(k, std::move(rises), y);
    }

    std::int64_t arity() const noexcept { return k_; }
    std::span<const std::int64_t> rises() const noexcept { return rises_; }
    std::int64_t length() const noexcept { return static_cast<std::int64_t>(rises_.size()); }
    std::int64_t end_height() const noexcept { return end_; }

    // y_1..y_n.
    std::vector<std::int64_t> heights() const {
        std::vector<std::int64_t> ys;
        ys.reserve(rises_.size());
        std::int64_t y = 0;
        for (auto r : rises_)
            ys.push_back(y += r);
        return ys;
    }

    friend bool operator==(const ExtMotzkinPath&, const ExtMotzkinPath&) = default;

private:
    ExtMotzkinPath(std::int64_t k, std::vector<std::int64_t> rises, std::int64_t end)
        : k_(k), rises_(std::move(rises)), end_(end) {}

    std::int64_t k_;
    std::vector<std::int64_t> rises_;
    std::int64_t end_;
};

// rise_i = s_i - s_{i-1} - k with s_0 = 0, so y_i = s_i - ik.
inline ExtMotzkinPath path_of(const ThresholdSequence& seq) {
    if (seq.params().d != 0)
        throw error(errc::invalid_parameter, "path_of needs offset 0; shift the sequence first");
    const std::int64_t k = seq.params().k;
    std::vector<std::int64_t> rises;
    rises.reserve(static_cast<std::size_t>(seq.size()));
    std::int64_t prev = 0;
    for (auto s : seq.values()) {
        rises.push_back(s - prev - k);
        prev = s;
    }
    return ExtMotzkinPath::make(k, std::move(rises));
}

// s_i = y_i + ik.
inline ThresholdSequence sequence_of_path(const ExtMotzkinPath& path, std::int64_t l) {
    const std::int64_t k = path.arity();
    if (path.length() < 1)
        throw error(errc::invalid_parameter, "an empty path has no sequence");
    check_params(ThresholdParams{k, l, path.length(), 0});
    if (path.end_height() > l)
        throw error(errc::height_exceeds_l,
                    "path ends at height " + std::to_string(path.end_height()) + " > l = " + std::to_string(l));
    auto ys = path.heights();
    for (std::size_t i = 0; i < ys.size(); ++i)
        ys[i] += static_cast<std::int64_t>(i + 1) * k;
    return validate(std::move(ys), ThresholdParams{k, l, path.length(), 0});
}

inline bool is_classic_motzkin(const ExtMotzkinPath& path) {
    for (auto r : path.rises())
        if (r < -1 || r > 1)
            return false;
    return path.end_height() == 0;
}

// Every (k,l)-extended Motzkin path of length n (end height <= l), rises
// tried in increasing order. Heights obey y_i <= l + (n-i)(k-1), the most
// that can still be shed with down steps of size at most k-1.
template <class Visitor>
std::uint64_t enumerate_paths(std::int64_t k, std::int64_t l, std::int64_t n, Visitor&& visit,
                              std::uint64_t budget = default_budget) {
    check_params(ThresholdParams{k, l, n, 0});
    detail::budget_counter counter(budget);
    std::vector<std::int64_t> rises(static_cast<std::size_t>(n));
    std::vector<std::int64_t> ys(static_cast<std::size_t>(n) + 1, 0);

    const auto lowest = [&](std::int64_t i) { return std::max(-(k - 1), -ys[static_cast<std::size_t>(i)]); };
    const auto highest = [&](std::int64_t i) {
        return l + (n - i - 1) * (k - 1) - ys[static_cast<std::size_t>(i)];
    };

    // rises[i] is the (i+1)-th step, taken from height ys[i].
    std::int64_t i = 0;
    rises[0] = lowest(0);
    while (true) {
        if (rises[static_cast<std::size_t>(i)] > highest(i)) {
            if (i == 0)
                break;
            --i;
            ++rises[static_cast<std::size_t>(i)];
            continue;
        }
        ys[static_cast<std::size_t>(i + 1)] = ys[static_cast<std::size_t>(i)] + rises[static_cast<std::size_t>(i)];
        if (i == n - 1) {
            counter.charge();
            const auto path = ExtMotzkinPath::make(k, rises);
            visit(path);
            ++rises[static_cast<std::size_t>(i)];
            continue;
        }
        ++i;
        rises[static_cast<std::size_t>(i)] = lowest(i);
    }
    return counter.used();
}

} // namespace raney

#endif // RANEY_PATHS_HPP
