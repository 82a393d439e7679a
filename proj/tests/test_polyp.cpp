#include <gtest/gtest.h>

#include "dgp/oracle/corpus.hpp"
#include "dgp/oracle/enumerate.hpp"
#include "dgp/polyp.hpp"

using namespace dgp;
using namespace dgp::polyp;

namespace {
const PayloadSlot kTop{"⊤"};
const PayloadSlot kA{"a"};

Value list_of(std::vector<Value> xs) {
  Value v = Value::roll(Value::in1(Value::tt()));
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) v = Value::roll(Value::in2(Value::pair(*it, v)));
  return v;
}
}  // namespace

TEST(PolyP, RoseExamplesConformAtTop) {
  EXPECT_TRUE(conform_mu(rose_code(), kTop, s_rose()));
  EXPECT_TRUE(conform_mu(rose_code(), kTop, l_rose()));
  EXPECT_FALSE(conform_mu(rose_code(), kA, s_rose()));
}

TEST(PolyP, PmapRewritesParametersOnly) {
  // pmap succ [a#0, a#1] = [a#1, a#2]
  const Value xs = list_of({Value::payload("a", 0), Value::payload("a", 1)});
  EXPECT_EQ(pmap(list_code(), successor(), xs, 10), list_of({Value::payload("a", 1), Value::payload("a", 2)}));
  EXPECT_EQ(pmap(list_code(), compose(successor(), successor()), xs, 10),
            pmap(list_code(), successor(), pmap(list_code(), successor(), xs, 10), 10));
}

TEST(PolyP, PmapThroughComposition) {
  const Value rose = Value::roll(Value::pair(Value::payload("a", 0),
                                             list_of({Value::roll(Value::pair(Value::payload("a", 1), list_of({})))})));
  const Value want = Value::roll(Value::pair(Value::payload("a", 1),
                                             list_of({Value::roll(Value::pair(Value::payload("a", 2), list_of({})))})));
  EXPECT_EQ(pmap(rose_code(), successor(), rose, 20), want);
}

TEST(PolyP, PmapRunsOutOfFuel) {
  EXPECT_THROW(pmap(list_code(), successor(), list_of({Value::payload("a", 0)}), 1), FuelExhausted);
}

TEST(PolyP, CompositionPitfall) {
  const Value w = oracle::tree_of_lists_witness();
  EXPECT_FALSE(conform_mu(oracle::naive_tree_of_lists_code(), kA, w));
  EXPECT_TRUE(conform_mu(tree_of_lists_code(), kA, w));
}

TEST(PolyP, Prints) {
  EXPECT_EQ(to_string(rose_code()), "P * (U + P * I) @ I");
  EXPECT_EQ(to_string(tree_of_lists_code()), "(U + P * I) @ P + I * I");
}

TEST(PolyP, ListCountsFromEnumerator) {
  // payload width 2: lists of length n have size 4n+3 and there are 2^n of them
  const auto vs = oracle::enumerate_polyp_mu(list_code(), kA, oracle::EnumBudget{11, 64, 2});
  ASSERT_EQ(vs.size(), 1u + 2u + 4u);
  for (const Value& v : vs) EXPECT_TRUE(conform_mu(list_code(), kA, v));
}
