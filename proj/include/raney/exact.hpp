#ifndef RANEY_EXACT_HPP
#define RANEY_EXACT_HPP

// Exact counting functions: binomials, Fuss-Catalan and Raney numbers (closed
// forms and convolution forms), Motzkin numbers. Every division is checked to
// be exact; nothing here ever rounds.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "raney/error.hpp"

namespace raney {

using ExactInt = boost::multiprecision::cpp_int;
using ExactRat = boost::multiprecision::cpp_rational;

namespace detail {

inline ExactInt exact_div(const ExactInt& num, const ExactInt& den, const char* where) {
    ExactInt q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0)
        throw std::logic_error(std::string("inexact division in ") + where);
    return q;
}

inline void require_arity(std::int64_t k) {
    if (k < 2)
        throw error(errc::invalid_parameter, "arity k must be >= 2, got " + std::to_string(k));
}

inline void require_nonneg(std::int64_t n, const char* name) {
    if (n < 0)
        throw error(errc::invalid_parameter, std::string(name) + " must be >= 0, got " + std::to_string(n));
}

// Coefficients 0..len-1 of the product of two truncated power series.
inline std::vector<ExactInt> convolve(const std::vector<ExactInt>& a, const std::vector<ExactInt>& b,
                                      std::size_t len) {
    std::vector<ExactInt> out(len, 0);
    for (std::size_t i = 0; i < len && i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; i + j < len && j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

// Truncated series power s^e, by repeated squaring.
inline std::vector<ExactInt> series_power(std::vector<ExactInt> base, std::int64_t e, std::size_t len) {
    std::vector<ExactInt> acc(len, 0);
    if (len == 0)
        return acc;
    acc[0] = 1;
    while (e > 0) {
        if (e & 1)
            acc = convolve(acc, base, len);
        e >>= 1;
        if (e > 0)
            base = convolve(base, base, len);
    }
    return acc;
}

} // namespace detail

// binomial(n, j) for n >= 0; zero outside 0 <= j <= n.
inline ExactInt binomial(std::int64_t n, std::int64_t j) {
    detail::require_nonneg(n, "n");
    if (j < 0 || j > n)
        return 0;
    if (j > n - j)
        j = n - j;
    ExactInt acc = 1;
    // acc stays equal to binomial(n - j + i, i) after step i.
    for (std::int64_t i = 1; i <= j; ++i) {
        acc *= (n - j + i);
        acc = detail::exact_div(acc, ExactInt(i), "binomial");
    }
    return acc;
}

// Number of k-ary trees with n internal nodes, (1/((k-1)n+1)) * binomial(kn, n).
inline ExactInt fuss_catalan(std::int64_t k, std::int64_t n) {
    detail::require_arity(k);
    detail::require_nonneg(n, "n");
    const std::int64_t kn = detail::checked_mul(k, n);
    return detail::exact_div(binomial(kn, n), ExactInt((k - 1) * n + 1), "fuss_catalan");
}

inline ExactInt catalan(std::int64_t n) { return fuss_catalan(2, n); }

// Memoized table of C^{(k)}_0..C^{(k)}_cap computed from the k-fold
// convolution recurrence only, never from the closed form. Not shared
// between threads; each caller owns its table.
class FussCatalanTable {
public:
    FussCatalanTable(std::int64_t k, std::int64_t cap) : k_(k), cap_(cap) {
        detail::require_arity(k);
        detail::require_nonneg(cap, "cap");
        values_.push_back(1);
    }

    std::int64_t arity() const noexcept { return k_; }
    std::int64_t cap() const noexcept { return cap_; }

    const ExactInt& operator()(std::int64_t n) {
        detail::require_nonneg(n, "n");
        if (n > cap_)
            throw error(errc::invalid_parameter,
                        "n = " + std::to_string(n) + " exceeds table cap " + std::to_string(cap_));
        while (static_cast<std::int64_t>(values_.size()) <= n)
            extend();
        return values_[static_cast<std::size_t>(n)];
    }

private:
    // C_m = sum over j_1+...+j_k = m-1 of C_{j_1}...C_{j_k}, i.e. the
    // coefficient of x^{m-1} in (sum_{j<m} C_j x^j)^k.
    void extend() {
        const std::size_t m = values_.size();
        auto power = detail::series_power(values_, k_, m);
        values_.push_back(power[m - 1]);
    }

    std::int64_t k_;
    std::int64_t cap_;
    std::vector<ExactInt> values_;
};

inline ExactInt fuss_catalan_rec(std::int64_t k, std::int64_t n) {
    detail::require_arity(k);
    detail::require_nonneg(n, "n");
    FussCatalanTable table(k, n);
    return table(n);
}

// Raney number R_n^{(k,r)}. Both closed forms are evaluated and must agree.
inline ExactInt raney_number(std::int64_t k, std::int64_t r, std::int64_t n) {
    detail::require_arity(k);
    detail::require_nonneg(n, "n");
    if (r <= 0)
        throw error(errc::invalid_parameter, "r must be >= 1, got " + std::to_string(r));
    const std::int64_t kn_r = detail::checked_add(detail::checked_mul(k, n), r);
    ExactInt first = detail::exact_div(ExactInt(r) * binomial(kn_r, n), ExactInt(kn_r), "raney");
    ExactInt second = detail::exact_div(ExactInt(r) * binomial(kn_r - 1, n), ExactInt((k - 1) * n + r), "raney");
    if (first != second)
        throw std::logic_error("raney closed forms disagree");
    return first;
}

// Raney number as the r-fold convolution of Fuss-Catalan numbers over
// i_1+...+i_r = n.
inline ExactInt raney_convolution(std::int64_t k, std::int64_t r, std::int64_t n) {
    detail::require_arity(k);
    detail::require_nonneg(n, "n");
    if (r <= 0)
        throw error(errc::invalid_parameter, "r must be >= 1, got " + std::to_string(r));
    const auto len = static_cast<std::size_t>(n) + 1;
    std::vector<ExactInt> series(len);
    for (std::size_t i = 0; i < len; ++i)
        series[i] = fuss_catalan(k, static_cast<std::int64_t>(i));
    return detail::series_power(std::move(series), r, len)[static_cast<std::size_t>(n)];
}

// Motzkin number: sum_j binomial(n, 2j) * C_j.
inline ExactInt motzkin(std::int64_t n) {
    detail::require_nonneg(n, "n");
    ExactInt sum = 0;
    for (std::int64_t j = 0; 2 * j <= n; ++j)
        sum += binomial(n, 2 * j) * catalan(j);
    return sum;
}

} // namespace raney

#endif // RANEY_EXACT_HPP
