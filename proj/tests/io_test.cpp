#include <gtest/gtest.h>

#include "raney/io.hpp"

using namespace raney;

TEST(Json, SequenceRoundTrip) {
    const auto s = validate({7, 9, 17, 18}, {4, 2, 4, 0});
    const auto j = to_json(s);
    EXPECT_EQ(sequence_from_json(parse_json(j.dump())), s);
}

TEST(Json, TreeShape) {
    const auto t = KaryTree::from_preorder(2, "11000");
    EXPECT_EQ(to_json(t).dump(), "[[null,null],null]");
    EXPECT_EQ(tree_from_json(to_json(t), 2), t);
    EXPECT_EQ(to_json(KaryTree::trivial(2)).dump(), "null");
    EXPECT_THROW(tree_from_json(parse_json("[null]"), 2), error);
}

TEST(Json, TupleRoundTrip) {
    const auto t = tuple_of(validate({7, 9, 17, 18}, {4, 2, 4, 0}));
    EXPECT_EQ(to_json(t).dump(), "[null,[null,[null,null,null,null],null,null],[[null,null,null,null],null,null,null]]");
    EXPECT_EQ(tuple_from_json(to_json(t), 4), t);
}

TEST(Json, PathRoundTrip) {
    const auto p = ExtMotzkinPath::make(5, {2, 3, -4, 0, 2, -3, 3});
    EXPECT_EQ(path_from_json(to_json(p)), p);
}

TEST(Json, MalformedInput) {
    EXPECT_THROW(parse_json("{"), error);
    EXPECT_THROW(sequence_from_json(parse_json("{\"k\":3}")), error);
}

TEST(Csv, ParseAndFormat) {
    const std::vector<std::int64_t> v{3, 6, 14};
    EXPECT_EQ(to_csv(v), "3,6,14");
    EXPECT_EQ(parse_csv_ints(" 3, 6,14 "), v);
    EXPECT_THROW(parse_csv_ints("3,,6"), error);
    EXPECT_THROW(parse_csv_ints("3,x"), error);
}

TEST(Dot, ShapesAndEdges) {
    const auto dot = to_dot(KaryTree::from_preorder(2, "100"), 5);
    EXPECT_NE(dot.find("n0 [shape=circle, label=\"5\"]"), std::string::npos);
    EXPECT_NE(dot.find("n2 [shape=box, label=\"3\"]"), std::string::npos);
    EXPECT_NE(dot.find("n0 -> n1"), std::string::npos);
    EXPECT_NE(dot.find("n0 -> n2"), std::string::npos);
}

TEST(Ascii, Path) {
    const auto p = ExtMotzkinPath::make(2, {2, -1, -1});
    EXPECT_EQ(render_ascii(p), " *\n  *\n*--*\n");
}
