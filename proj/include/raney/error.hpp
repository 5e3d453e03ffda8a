#ifndef RANEY_ERROR_HPP
#define RANEY_ERROR_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace raney {

enum class errc {
    invalid_parameter,
    length_mismatch,
    not_increasing,
    bound_violation,
    budget_exceeded,
    unreachable_label,
    empty_tuple,
    height_exceeds_l,
    invalid_path,
    malformed_word,
    not_a_threshold_sequence,
};

inline const char* to_string(errc code) {
    switch (code) {
    case errc::invalid_parameter: return "invalid-parameter";
    case errc::length_mismatch: return "length-mismatch";
    case errc::not_increasing: return "not-increasing";
    case errc::bound_violation: return "bound-violation";
    case errc::budget_exceeded: return "budget-exceeded";
    case errc::unreachable_label: return "unreachable-label";
    case errc::empty_tuple: return "empty-tuple";
    case errc::height_exceeds_l: return "height-exceeds-l";
    case errc::invalid_path: return "invalid-path";
    case errc::malformed_word: return "malformed-word";
    case errc::not_a_threshold_sequence: return "not-a-threshold-sequence";
    }
    return "unknown";
}

// Every contract violation raised by the library. `index()` carries the
// 1-based position of the offending element when one exists.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what, std::optional<std::int64_t> index = std::nullopt)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), index_(index) {}

    errc code() const noexcept { return code_; }
    std::optional<std::int64_t> index() const noexcept { return index_; }

private:
    errc code_;
    std::optional<std::int64_t> index_;
};

namespace detail {

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw error(errc::invalid_parameter, "64-bit overflow in bound computation");
    return r;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw error(errc::invalid_parameter, "64-bit overflow in bound computation");
    return r;
}

// Counts yielded items against a caller cap; the cap itself is reachable,
// the item after it is not.
class budget_counter {
public:
    explicit budget_counter(std::uint64_t cap) : cap_(cap) {}

    void charge() {
        if (used_ == cap_)
            throw error(errc::budget_exceeded, "more than " + std::to_string(cap_) + " objects");
        ++used_;
    }
    std::uint64_t used() const noexcept { return used_; }

private:
    std::uint64_t cap_;
    std::uint64_t used_ = 0;
};

} // namespace detail

inline constexpr std::uint64_t default_budget = 1'000'000;

} // namespace raney

#endif // RANEY_ERROR_HPP
