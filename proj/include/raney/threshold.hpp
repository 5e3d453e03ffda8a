#ifndef RANEY_THRESHOLD_HPP
#define RANEY_THRESHOLD_HPP

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "raney/error.hpp"
#include "raney/exact.hpp"

namespace raney {

// (k, l, n) with offset d. A (k,l)-threshold sequence of length n is a
// strictly increasing s_1..s_n with k*i + d <= s_i <= k*n + l + d.
struct ThresholdParams {
    std::int64_t k = 2;
    std::int64_t l = 0;
    std::int64_t n = 1;
    std::int64_t d = 0;

    friend bool operator==(const ThresholdParams&, const ThresholdParams&) = default;

    std::int64_t upper_bound() const {
        return detail::checked_add(detail::checked_add(detail::checked_mul(k, n), l), d);
    }
    std::int64_t lower_bound(std::int64_t i) const { return detail::checked_add(detail::checked_mul(k, i), d); }
};

// Rejects l = k-1 (and beyond); those sequences are prefixes of (k,0)
// sequences one longer and are not counted by R_n^{(k,l+1)}.
inline void check_params(const ThresholdParams& p, std::int64_t min_n = 1) {
    detail::require_arity(p.k);
    if (p.l < 0 || p.l > p.k - 2)
        throw error(errc::invalid_parameter,
                    "l must lie in [0, k-2], got l = " + std::to_string(p.l) + " for k = " + std::to_string(p.k));
    if (p.n < min_n)
        throw error(errc::invalid_parameter,
                    "n must be >= " + std::to_string(min_n) + ", got " + std::to_string(p.n));
    (void)p.upper_bound();
}

namespace detail {
struct sequence_access;
}

class ThresholdSequence {
public:
    const ThresholdParams& params() const noexcept { return params_; }
    std::span<const std::int64_t> values() const noexcept { return values_; }
    std::int64_t size() const noexcept { return static_cast<std::int64_t>(values_.size()); }
    std::int64_t operator[](std::int64_t i) const { return values_[static_cast<std::size_t>(i)]; }
    std::int64_t back() const { return values_.back(); }

    friend bool operator==(const ThresholdSequence&, const ThresholdSequence&) = default;
    friend auto operator<=>(const ThresholdSequence& a, const ThresholdSequence& b) { return a.values_ <=> b.values_; }

private:
    ThresholdSequence(ThresholdParams p, std::vector<std::int64_t> v) : params_(p), values_(std::move(v)) {}

    friend struct detail::sequence_access;

    ThresholdParams params_;
    std::vector<std::int64_t> values_;
};

namespace detail {

struct sequence_access {
    static ThresholdSequence make(ThresholdParams p, std::vector<std::int64_t> v) {
        return ThresholdSequence(p, std::move(v));
    }
    static std::vector<std::int64_t>& values(ThresholdSequence& s) { return s.values_; }
};

} // namespace detail

inline ThresholdSequence validate(std::vector<std::int64_t> values, const ThresholdParams& params) {
    check_params(params);
    if (static_cast<std::int64_t>(values.size()) != params.n)
        throw error(errc::length_mismatch, "expected " + std::to_string(params.n) + " values, got " +
                                               std::to_string(values.size()));
    const std::int64_t hi = params.upper_bound();
    for (std::int64_t i = 1; i <= params.n; ++i) {
        const std::int64_t s = values[static_cast<std::size_t>(i - 1)];
        if (i > 1 && s <= values[static_cast<std::size_t>(i - 2)])
            throw error(errc::not_increasing, "s_" + std::to_string(i) + " = " + std::to_string(s) +
                                                  " does not exceed s_" + std::to_string(i - 1), i);
        const std::int64_t lo = params.lower_bound(i);
        if (s < lo || s > hi)
            throw error(errc::bound_violation, "s_" + std::to_string(i) + " = " + std::to_string(s) +
                                                   " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]",
                        i);
    }
    return detail::sequence_access::make(params, std::move(values));
}

inline bool is_proper(const ThresholdSequence& seq) { return seq.back() == seq.params().upper_bound(); }

// Largest i < n with s_i < s_n - (n-i)k, or 0. Works on raw values so the
// recursive splitting in the tree bijection can reuse it on prefixes.
inline std::int64_t cut_index(std::span<const std::int64_t> values, std::int64_t k) {
    const auto n = static_cast<std::int64_t>(values.size());
    if (n == 0)
        return 0;
    const std::int64_t last = values.back();
    for (std::int64_t i = n - 1; i >= 1; --i)
        if (values[static_cast<std::size_t>(i - 1)] < last - (n - i) * k)
            return i;
    return 0;
}

inline std::int64_t cut_index(const ThresholdSequence& seq) {
    if (seq.params().d != 0)
        throw error(errc::invalid_parameter, "cut_index needs offset 0; shift the sequence first");
    return cut_index(seq.values(), seq.params().k);
}

inline ThresholdSequence shift(const ThresholdSequence& seq, std::int64_t d) {
    ThresholdParams p = seq.params();
    p.d = detail::checked_add(p.d, d);
    (void)p.upper_bound();
    std::vector<std::int64_t> v(seq.values().begin(), seq.values().end());
    for (auto& s : v)
        s = detail::checked_add(s, d);
    return detail::sequence_access::make(p, std::move(v));
}

// Calls visit(const ThresholdSequence&) for every (k,l)-threshold sequence
// of length n in lexicographic order. Returns the number visited.
template <class Visitor>
std::uint64_t enumerate(const ThresholdParams& params, Visitor&& visit, std::uint64_t budget = default_budget) {
    check_params(params);
    const std::int64_t n = params.n;
    const std::int64_t hi = params.upper_bound();
    detail::budget_counter counter(budget);
    auto cur = detail::sequence_access::make(params, std::vector<std::int64_t>(static_cast<std::size_t>(n)));
    auto& v = detail::sequence_access::values(cur);

    // Iterative backtracking: position i (0-based) ranges over
    // [max(v[i-1]+1, k(i+1)+d), hi - (n-1-i)].
    const auto low_at = [&](std::int64_t i) {
        const std::int64_t bound = params.lower_bound(i + 1);
        return i == 0 ? bound : std::max(bound, v[static_cast<std::size_t>(i - 1)] + 1);
    };
    std::int64_t i = 0;
    v[0] = low_at(0);
    while (true) {
        if (v[static_cast<std::size_t>(i)] > hi - (n - 1 - i)) {
            if (i == 0)
                break;
            --i;
            ++v[static_cast<std::size_t>(i)];
            continue;
        }
        if (i == n - 1) {
            counter.charge();
            visit(static_cast<const ThresholdSequence&>(cur));
            ++v[static_cast<std::size_t>(i)];
            continue;
        }
        ++i;
        v[static_cast<std::size_t>(i)] = low_at(i);
    }
    return counter.used();
}

inline std::vector<ThresholdSequence> enumerate_all(const ThresholdParams& params,
                                                    std::uint64_t budget = default_budget) {
    std::vector<ThresholdSequence> out;
    enumerate(params, [&](const ThresholdSequence& s) { out.push_back(s); }, budget);
    return out;
}

// Number of (k,l)-threshold sequences of length n: R_n^{(k,l+1)}. n = 0 gives 1.
inline ExactInt count(const ThresholdParams& params) {
    check_params(params, 0);
    return raney_number(params.k, params.l + 1, params.n);
}

// Number of proper sequences (s_n = kn + l). Every (k,0)-sequence is proper.
inline ExactInt count_proper(const ThresholdParams& params) {
    check_params(params, 0);
    if (params.n == 0)
        return 1;
    if (params.l == 0)
        return raney_number(params.k, 1, params.n);
    return raney_number(params.k, params.k + params.l, params.n - 1);
}

} // namespace raney

#endif // RANEY_THRESHOLD_HPP
