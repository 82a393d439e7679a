#include <gtest/gtest.h>

#include "dgp/embed/polyp_indexed.hpp"
#include "dgp/indexed.hpp"
#include "dgp/oracle/corpus.hpp"
#include "dgp/oracle/enumerate.hpp"

using namespace dgp;
using namespace dgp::indexed;

namespace {
const PayloadSlot kA{"a"};

Value list_of(std::vector<Value> xs) {
  Value v = Value::roll(Value::in1(Value::tt()));
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) v = Value::roll(Value::in2(Value::pair(*it, v)));
  return v;
}
}  // namespace

TEST(Indexed, LiftedListPrints) {
  EXPECT_EQ(to_string(embed::lift_p_to_i_mu(polyp::list_code())), "in: ⋆\nout: ⋆\nfix (U + I@inl.⋆ * I@inr.⋆)");
}

TEST(Indexed, LiftedListConforms) {
  const Code c = embed::lift_p_to_i_mu(polyp::list_code());
  const SlotAssignment r = embed::polyp_mu_assignment(kA);
  EXPECT_TRUE(wellformed(c));
  EXPECT_TRUE(conform(c, r, star(), list_of({Value::payload("a", 0)})));
  EXPECT_FALSE(conform(c, r, star(), list_of({Value::payload("b", 0)})));
  EXPECT_FALSE(conform(c, r, star(), Value::tt()));
}

// map_i on the lifted code agrees with pmap on the original
TEST(Indexed, MapAgreesWithPmap) {
  for (const polyp::Code& pc : {polyp::list_code(), polyp::rose_code(), polyp::tree_of_lists_code()}) {
    const Code ic = embed::lift_p_to_i_mu(pc);
    for (const Value& v : oracle::enumerate_polyp_mu(pc, kA, oracle::EnumBudget{12, 64, 2})) {
      const std::size_t fuel = v.size();
      const Value via_i = map(ic, uniform(successor()), star(), embed::from_mu_p_i(pc, v, fuel), fuel);
      EXPECT_EQ(embed::to_mu_p_i(pc, via_i, fuel), polyp::pmap(pc, successor(), v, fuel)) << to_string(v);
    }
  }
}

TEST(Indexed, PairListKeepsSortsApart) {
  const Code c = oracle::pair_list_code();
  const SlotAssignment r{{IndexLabel("a"), kA}, {IndexLabel("b"), PayloadSlot{"b"}}};
  const Value nil = Value::roll(Value::in1(Value::tt()));
  const Value ok = Value::roll(Value::in2(Value::pair(Value::payload("a", 0), Value::pair(Value::payload("b", 1), nil))));
  const Value swapped =
      Value::roll(Value::in2(Value::pair(Value::payload("b", 0), Value::pair(Value::payload("a", 1), nil))));
  EXPECT_TRUE(conform(c, r, star(), ok));
  EXPECT_FALSE(conform(c, r, star(), swapped));
  EXPECT_EQ(map(c, only_at(IndexLabel("b"), successor()), star(), ok, 10),
            Value::roll(Value::in2(Value::pair(Value::payload("a", 0), Value::pair(Value::payload("b", 2), nil)))));
}

TEST(Indexed, MapRunsOutOfFuel) {
  const Code c = embed::lift_p_to_i_mu(polyp::list_code());
  EXPECT_THROW(map(c, uniform(successor()), star(), list_of({Value::payload("a", 0)}), 1), FuelExhausted);
}

TEST(Indexed, IdOutsideInputsIsIllFormed) {
  EXPECT_FALSE(wellformed(Code::id(unit_index_set(), unit_index_set(), IndexLabel("x"))));
  EXPECT_FALSE(wellformed(Code::tag(unit_index_set(), unit_index_set(), IndexLabel("x"))));
  EXPECT_TRUE(wellformed(Code::tag(unit_index_set(), unit_index_set(), star())));
}
