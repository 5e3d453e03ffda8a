#include <gtest/gtest.h>

#include "raney/verify.hpp"

#include "oracles.hpp"

using namespace raney;

namespace {

void expect_clean(const VerifyReport& r) {
    EXPECT_FALSE(r.cells.empty()) << r.suite;
    for (const auto& c : r.cells)
        EXPECT_TRUE(c.pass) << r.suite << " " << c.params << " expected " << c.expected << " got " << c.observed
                            << " " << c.detail;
}

} // namespace

TEST(Report, FailingCellIsCounted) {
    VerifyReport r{"x", {}, {}};
    r.add("a", 1, 1);
    r.add("b", 1, 2);
    r.add("c", 3, 3, "counterexample");
    EXPECT_FALSE(r.passed());
    EXPECT_EQ(r.failures(), 2u);
    const auto j = to_json(r);
    EXPECT_EQ(j["suite"], "x");
}

TEST(TernaryRecurrences, InitialValues) {
    const auto [a, b] = ternary_left_to_right(4);
    EXPECT_EQ(a[1], 1);
    EXPECT_EQ(a[2], 3);
    EXPECT_EQ(b[1], 2);
    EXPECT_EQ(b[2], 7);
    const auto [a2, b2] = ternary_right_to_left(4);
    EXPECT_EQ(a, a2);
    EXPECT_EQ(b, b2);
}

TEST(TernaryRecurrences, MatchesSubsetFilter) {
    // a_n: simple 3-threshold sequences, b_n: double ones.
    const auto [a, b] = ternary_left_to_right(6);
    for (std::int64_t n = 1; n <= 6; ++n) {
        EXPECT_EQ(a[static_cast<std::size_t>(n)], oracle::threshold_sequences(3, 0, n).size());
        EXPECT_EQ(b[static_cast<std::size_t>(n)], oracle::threshold_sequences(3, 1, n).size());
    }
}

TEST(Oracles, TransferCountMatchesBruteForce) {
    for (std::int64_t k = 2; k <= 4; ++k)
        for (std::int64_t l = 0; l <= k - 2; ++l)
            for (std::int64_t n = 1; n <= 5; ++n) {
                const auto brute = oracle::threshold_sequences(k, l, n).size();
                EXPECT_EQ(oracle_count_transfer(k, l, n), brute);
                EXPECT_EQ(oracle_sequences(k, l, n).count, brute);
            }
}

TEST(Identities, AllSuitesPass) {
    expect_clean(check_closed_forms(6, 12, 10));
    expect_clean(check_ternary_recurrences(25));
    expect_clean(check_ternary_difference(40));
    expect_clean(check_catalan_pow2(60));
    expect_clean(check_rational_identities(50));
    for (std::int64_t k = 3; k <= 6; ++k)
        for (std::int64_t l = 1; l <= k - 2; ++l)
            expect_clean(check_raney_difference(k, l, 30));
    expect_clean(check_oeis_prefixes());
}

TEST(Grid, CoversRequiredLengths) {
    const auto cells = count_grid(2, 5, ExactInt(1'000'000));
    for (std::int64_t k = 2; k <= 4; ++k)
        for (std::int64_t l = 0; l <= k - 2; ++l) {
            std::int64_t n_max = 0;
            for (const auto& c : cells)
                if (c.k == k && c.l == l)
                    n_max = std::max(n_max, c.n);
            EXPECT_GE(n_max, 7) << k << " " << l;
        }
}

TEST(Enumeration, SmallCellsPass) {
    for (std::int64_t k = 2; k <= 4; ++k)
        for (std::int64_t l = 0; l <= k - 2; ++l)
            for (std::int64_t n = 1; n <= 4; ++n) {
                expect_clean(check_sequence_counts(k, l, n));
                expect_clean(check_bijections(k, l, n));
            }
}

TEST(Enumeration, BudgetPropagates) {
    EXPECT_THROW(check_sequence_counts(3, 1, 5, 10), error);
}
