#include <gtest/gtest.h>

#include "dgp/value.hpp"

using namespace dgp;

TEST(Value, SizeCountsNodes) {
  EXPECT_EQ(value_size(Value::tt()), 1u);
  EXPECT_EQ(value_size(Value::pair(Value::tt(), Value::refl())), 3u);
  EXPECT_EQ(value_size(Value::roll(Value::in2(Value::roll(Value::in1(Value::tt()))))), 5u);
}

TEST(Value, CanonicalPrint) {
  EXPECT_EQ(to_string(Value::pair(Value::tt(), Value::refl())), "(tt , refl)");
  EXPECT_EQ(to_string(Value::payload("a", 3)), "a#3");
  EXPECT_EQ(to_string(Value::roll(Value::in2(Value::konst(Value::rec(Value::tt()))))), "<in2 k rec tt>");
}

TEST(Value, OrderIsSizeFirst) {
  const Value small = Value::in1(Value::tt());
  const Value big = Value::pair(Value::tt(), Value::tt());
  EXPECT_LT(small, big);
  EXPECT_LT(Value::tt(), Value::refl());
  EXPECT_LT(Value::payload("a", 0), Value::payload("a", 1));
  EXPECT_EQ(Value::pair(Value::tt(), Value::tt()), Value::pair(Value::tt(), Value::tt()));
}

TEST(Value, LabelsPrintWithSidePrefixes) {
  EXPECT_EQ(star().to_string(), "⋆");
  EXPECT_EQ(IndexLabel::left(IndexLabel::right(IndexLabel("a"))).to_string(), "inl.inr.a");
  EXPECT_NE(IndexLabel::left(star()), IndexLabel::right(star()));
}

TEST(Value, DisjointUnionTagsBothSides) {
  const IndexSet u = disjoint_union(IndexSet{IndexLabel("a"), IndexLabel("b")}, unit_index_set());
  EXPECT_EQ(u.to_string(), "inl.a inl.b inr.⋆");
  EXPECT_EQ(disjoint_union({}, unit_index_set()).to_string(), "inr.⋆");
}

TEST(Value, IndexSetKeepsInsertionOrderAndRejectsDuplicates) {
  IndexSet s;
  EXPECT_TRUE(s.insert(IndexLabel("b")));
  EXPECT_TRUE(s.insert(IndexLabel("a")));
  EXPECT_FALSE(s.insert(IndexLabel("b")));
  EXPECT_EQ(s.to_string(), "b a");
}

TEST(Value, FuelRunsOut) {
  EXPECT_EQ(spend(2), 1u);
  EXPECT_THROW(spend(0), FuelExhausted);
}

TEST(Value, Transformers) {
  const Value a0 = Value::payload("a", 0);
  EXPECT_EQ(identity()(a0), a0);
  EXPECT_EQ(successor()(a0), Value::payload("a", 1));
  EXPECT_EQ(compose(successor(), successor())(a0), Value::payload("a", 2));
  const IxTransform f = only_at(IndexLabel("x"), successor());
  EXPECT_EQ(f(IndexLabel("x"), a0), Value::payload("a", 1));
  EXPECT_EQ(f(IndexLabel("y"), a0), a0);
}
