#include <gtest/gtest.h>

#include <set>
#include <unordered_set>

#include "raney/trees.hpp"

#include "oracles.hpp"

using namespace raney;

namespace {

std::string tuple_code(const TreeTuple& t) {
    std::string out;
    for (const auto& tree : t.trees)
        out += tree.preorder();
    return out;
}

} // namespace

TEST(KaryTree, PreorderValidation) {
    EXPECT_TRUE(KaryTree::trivial(3).is_trivial());
    EXPECT_EQ(KaryTree::from_preorder(2, "100").internal_count(), 1);
    EXPECT_THROW(KaryTree::from_preorder(2, "10"), error);
    EXPECT_THROW(KaryTree::from_preorder(2, "1000"), error);
    EXPECT_THROW(KaryTree::from_preorder(2, "1x0"), error);
    EXPECT_THROW(KaryTree::trivial(1), error);
}

TEST(KaryTree, NodeAndChildren) {
    const auto leaf = KaryTree::trivial(3);
    const std::vector<KaryTree> kids{leaf, leaf, leaf};
    const auto t = KaryTree::node(kids);
    EXPECT_EQ(t.preorder(), "1000");
    EXPECT_EQ(t.children(), kids);
    const std::vector<KaryTree> nested{t, leaf, t};
    const auto u = KaryTree::node(nested);
    EXPECT_EQ(u.preorder(), "1100001000");
    EXPECT_EQ(u.children(), nested);
    EXPECT_EQ(u.node_count(), 10);
    const std::vector<KaryTree> mixed{t, KaryTree::trivial(2)};
    EXPECT_THROW(KaryTree::node(mixed), error);
}

TEST(WLabels, BreadthFirstDecreasing) {
    const auto t = KaryTree::from_preorder(2, "11000");
    // preorder: root, left (internal), left.left, left.right, right
    EXPECT_EQ(w_labels(t, 10), (std::vector<std::int64_t>{10, 9, 7, 6, 8}));
    EXPECT_EQ(internal_labels(t, 10), (std::vector<std::int64_t>{10, 9}));
}

TEST(WLabels, SmallestLabelIsWMinusJk) {
    enumerate_trees(3, 4, [](const KaryTree& t) {
        const auto labels = w_labels(t, 40);
        ASSERT_EQ(*std::min_element(labels.begin(), labels.end()), 40 - 4 * 3);
        ASSERT_EQ(std::set<std::int64_t>(labels.begin(), labels.end()).size(), labels.size());
    });
}

TEST(Builder, QuaternarySixteenTree) {
    const std::vector<std::int64_t> labels{16, 14, 12, 7};
    const auto t = build_from_internal_labels(4, 16, labels);
    EXPECT_EQ(t.preorder(), "10100000110000000");
    EXPECT_EQ(internal_labels(t, 16), labels);
}

TEST(Builder, UnreachableLabel) {
    const std::vector<std::int64_t> labels{16, 11};
    try {
        build_from_internal_labels(4, 16, labels);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::unreachable_label);
    }
}

TEST(Builder, RoundTripsEveryTree) {
    for (std::int64_t k = 2; k <= 4; ++k)
        for (std::int64_t n = 1; n <= 5; ++n)
            enumerate_trees(k, n, [&](const KaryTree& t) {
                const auto labels = internal_labels(t, 100);
                ASSERT_EQ(build_from_internal_labels(k, 100, labels), t);
            });
}

TEST(TupleOf, SingleTree) {
    const auto s = validate({7, 12, 14, 16}, {4, 0, 4, 0});
    const auto t = tuple_of(s);
    ASSERT_EQ(t.trees.size(), 1u);
    EXPECT_EQ(t.trees[0].preorder(), "10100000110000000");

    const auto t2 = tuple_of(validate({7, 12, 14, 16}, {4, 2, 4, 0}));
    ASSERT_EQ(t2.trees.size(), 3u);
    EXPECT_EQ(t2.trees[0], t.trees[0]);
    EXPECT_TRUE(t2.trees[1].is_trivial());
    EXPECT_TRUE(t2.trees[2].is_trivial());
}

TEST(TupleOf, TwoTreesWithCut) {
    const auto v = validate({7, 9, 17, 18}, {4, 2, 4, 0});
    EXPECT_EQ(cut_index(v), 2);
    const auto forest = forest_of(v);
    ASSERT_EQ(forest.size(), 2u);
    EXPECT_EQ(forest[0].preorder(), "110000000");
    EXPECT_EQ(forest[1].preorder(), "101000000");
    const auto t = tuple_of(v);
    ASSERT_EQ(t.trees.size(), 3u);
    EXPECT_TRUE(t.trees[0].is_trivial());
    EXPECT_EQ(t.trees[1], forest[1]);
    EXPECT_EQ(t.trees[2], forest[0]);
    EXPECT_EQ(sequence_of_tuple(t, 4), v);
}

TEST(SequenceOfTuple, Errors) {
    EXPECT_THROW(sequence_of_tuple(TreeTuple{3, {}}, 0), error);
    const TreeTuple t{3, {KaryTree::from_preorder(3, "1000"), KaryTree::trivial(3)}};
    EXPECT_THROW(sequence_of_tuple(t, 2), error);
    EXPECT_EQ(sequence_of_tuple(t).size(), 1);
}

TEST(TupleBijection, RoundTripInjectiveSurjective) {
    for (std::int64_t k = 2; k <= 4; ++k)
        for (std::int64_t l = 0; l <= k - 2; ++l)
            for (std::int64_t n = 1; n <= 6; ++n) {
                const ThresholdParams p{k, l, n, 0};
                std::set<std::string> images;
                enumerate(p, [&](const ThresholdSequence& s) {
                    const auto t = tuple_of(s);
                    ASSERT_EQ(t.l(), l);
                    ASSERT_EQ(t.internal_count(), n);
                    ASSERT_EQ(sequence_of_tuple(t, n), s);
                    ASSERT_TRUE(images.insert(tuple_code(t)).second) << "collision";
                });
                // Codomain from the brute-force code enumerator.
                const auto codes = oracle::forest_codes(k, l + 1, n);
                ASSERT_EQ(images, codes) << k << " " << l << " " << n;
            }
}

TEST(EnumerateTrees, MatchesBruteForce) {
    for (std::int64_t k = 2; k <= 4; ++k)
        for (std::int64_t n = 0; n <= 5; ++n) {
            std::set<std::string> got;
            enumerate_trees(k, n, [&](const KaryTree& t) { got.insert(t.preorder()); });
            ASSERT_EQ(got, oracle::forest_codes(k, 1, n));
        }
    EXPECT_EQ(enumerate_trees(2, 4, [](const KaryTree&) {}), 14u);
}

TEST(EnumerateTuples, MatchesBruteForce) {
    for (std::int64_t k = 2; k <= 4; ++k)
        for (std::int64_t r = 1; r <= 3; ++r)
            for (std::int64_t n = 0; n <= 4; ++n) {
                std::unordered_set<TreeTuple, TreeTupleHash> seen;
                std::set<std::string> got;
                enumerate_tuples(k, r, n, [&](const TreeTuple& t) {
                    ASSERT_EQ(static_cast<std::int64_t>(t.trees.size()), r);
                    seen.insert(t);
                    got.insert(tuple_code(t));
                });
                ASSERT_EQ(got, oracle::forest_codes(k, r, n));
                ASSERT_EQ(seen.size(), got.size());
            }
}

TEST(EnumerateTrees, Budget) {
    EXPECT_THROW(enumerate_trees(2, 4, [](const KaryTree&) {}, 13), error);
    EXPECT_EQ(enumerate_tuples(3, 2, 2, [](const TreeTuple&) {}, 7), 7u);
}
