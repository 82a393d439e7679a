#include <gtest/gtest.h>

#include "dgp/oracle/enumerate.hpp"
#include "dgp/regular.hpp"

using namespace dgp;
using namespace dgp::regular;

TEST(Regular, ANatConformsAndFoldsToTwo) {
  EXPECT_TRUE(conform_mu(nat_code(), a_nat()));
  EXPECT_EQ(cata(nat_code(), to_nat(), a_nat(), 10), Value::payload("nat", 2));
}

TEST(Regular, CataWithReRollIsIdentity) {
  EXPECT_EQ(cata(nat_code(), re_roll(), a_nat(), 10), a_nat());
}

TEST(Regular, CataSpendsOneFuelPerRoll) {
  EXPECT_THROW(cata(nat_code(), to_nat(), a_nat(), 2), FuelExhausted);
  EXPECT_NO_THROW(cata(nat_code(), to_nat(), a_nat(), 3));
}

TEST(Regular, ConformRejectsWrongShapes) {
  EXPECT_FALSE(conform_mu(nat_code(), Value::in1(Value::tt())));
  EXPECT_FALSE(conform_mu(nat_code(), Value::roll(Value::in2(Value::tt()))));
  EXPECT_FALSE(conform_mu(nat_code(), Value::roll(Value::pair(Value::tt(), Value::tt()))));
}

TEST(Regular, MapTouchesOnlyRecursivePositions) {
  const Code c = Code::sum(Code::unit(), Code::prod(Code::id(), Code::id()));
  const Value v = Value::in2(Value::pair(Value::payload("a", 0), Value::payload("a", 1)));
  EXPECT_EQ(map(c, successor(), v), Value::in2(Value::pair(Value::payload("a", 1), Value::payload("a", 2))));
  EXPECT_THROW(map(c, successor(), Value::refl()), MalformedValue);
}

TEST(Regular, PrintsWithPrecedence) {
  EXPECT_EQ(to_string(nat_code()), "U + I");
  EXPECT_EQ(to_string(Code::prod(Code::sum(Code::unit(), Code::id()), Code::id())), "(U + I) * I");
  EXPECT_EQ(to_string(Code::sum(Code::sum(Code::unit(), Code::unit()), Code::id())), "(U + U) + I");
}

// Numeral n is n+1 rolls over n in2 and one in1 tt: size 2n+3.
TEST(Regular, NatCountsFromEnumerator) {
  const auto count = [](std::size_t max) {
    return oracle::enumerate_regular_mu(nat_code(), oracle::EnumBudget{max, 64, 2}).size();
  };
  EXPECT_EQ(count(2), 0u);
  EXPECT_EQ(count(3), 1u);
  EXPECT_EQ(count(9), 4u);
  EXPECT_EQ(count(12), 5u);
  const auto vs = oracle::enumerate_regular_mu(nat_code(), oracle::EnumBudget{9, 64, 2});
  for (std::size_t n = 0; n < vs.size(); ++n) {
    EXPECT_EQ(value_size(vs[n]), 2 * n + 3);
    EXPECT_EQ(cata(nat_code(), to_nat(), vs[n], 64), Value::payload("nat", n));
  }
}
