#include <gtest/gtest.h>

#include <set>

#include "raney/paths.hpp"

#include "oracles.hpp"

using namespace raney;

TEST(Path, ProperFiveThreeSequence) {
    const auto s = validate({7, 15, 16, 21, 28, 30, 38}, {5, 3, 7, 0});
    EXPECT_TRUE(is_proper(s));
    const auto p = path_of(s);
    EXPECT_EQ(std::vector<std::int64_t>(p.rises().begin(), p.rises().end()),
              (std::vector<std::int64_t>{2, 3, -4, 0, 2, -3, 3}));
    EXPECT_EQ(p.end_height(), 3);
    EXPECT_EQ(sequence_of_path(p, 3), s);
}

TEST(Path, MakeRejectsBadSteps) {
    EXPECT_THROW(ExtMotzkinPath::make(3, {2, -3}), error);
    EXPECT_THROW(ExtMotzkinPath::make(3, {1, -2}), error);
    try {
        ExtMotzkinPath::make(3, {0, 1, -2});
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::invalid_path);
        EXPECT_EQ(e.index(), 3);
    }
    EXPECT_EQ(ExtMotzkinPath::make(3, {4, -2, -2}).end_height(), 0);
}

TEST(Path, HeightsAreHeightsOffsetFromSequence) {
    enumerate({3, 1, 4, 0}, [](const ThresholdSequence& s) {
        const auto ys = path_of(s).heights();
        for (std::int64_t i = 0; i < s.size(); ++i)
            ASSERT_EQ(ys[static_cast<std::size_t>(i)], s[i] - 3 * (i + 1));
    });
}

TEST(Path, EndAboveLIsRejected) {
    const auto p = ExtMotzkinPath::make(4, {3});
    try {
        sequence_of_path(p, 2);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::height_exceeds_l);
    }
    EXPECT_THROW(sequence_of_path(p, 3), error);
}

TEST(Path, FourPathsOfCatalanType) {
    std::int64_t total = 0, classic = 0;
    std::set<std::vector<std::int64_t>> non_classic;
    enumerate_paths(2, 0, 4, [&](const ExtMotzkinPath& p) {
        ++total;
        bool unit_steps = true;
        for (auto r : p.rises())
            unit_steps = unit_steps && r <= 1;
        ASSERT_EQ(is_classic_motzkin(p) && unit_steps, unit_steps);
        if (unit_steps)
            ++classic;
        else
            non_classic.insert({p.rises().begin(), p.rises().end()});
    });
    EXPECT_EQ(total, 14);
    EXPECT_EQ(classic, 9);
    EXPECT_EQ(classic, oracle::classic_motzkin_paths(4));
    EXPECT_EQ(non_classic.size(), 5u);
}

TEST(Path, BijectionGrid) {
    for (std::int64_t k = 2; k <= 5; ++k)
        for (std::int64_t l = 0; l <= k - 2; ++l)
            for (std::int64_t n = 1; n <= 5; ++n) {
                std::set<std::vector<std::int64_t>> images, enumerated;
                std::int64_t at_l = 0;
                enumerate({k, l, n, 0}, [&](const ThresholdSequence& s) {
                    const auto p = path_of(s);
                    ASSERT_LE(p.end_height(), l);
                    ASSERT_EQ(sequence_of_path(p, l), s);
                    ASSERT_TRUE(images.insert({p.rises().begin(), p.rises().end()}).second);
                });
                enumerate_paths(k, l, n, [&](const ExtMotzkinPath& p) {
                    enumerated.insert({p.rises().begin(), p.rises().end()});
                    at_l += p.end_height() == l ? 1 : 0;
                });
                ASSERT_EQ(images, enumerated);
                ASSERT_EQ(at_l, count_proper({k, l, n, 0}));
            }
}

TEST(Path, NeedsZeroOffset) {
    const auto s = shift(validate({3, 6}, {3, 0, 2, 0}), 1);
    EXPECT_THROW(path_of(s), error);
}
