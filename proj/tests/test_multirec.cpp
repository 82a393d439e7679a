#include <gtest/gtest.h>

#include "dgp/multirec.hpp"
#include "dgp/oracle/enumerate.hpp"

using namespace dgp;
using namespace dgp::multirec;

namespace {
Value zig_end() { return Value::roll(Value::in1(Value::pair(Value::refl(), Value::in2(Value::tt())))); }
Value zig(Value x) { return Value::roll(Value::in1(Value::pair(Value::refl(), Value::in1(std::move(x))))); }
Value zag(Value x) { return Value::roll(Value::in2(Value::pair(Value::refl(), std::move(x)))); }

/// zig (zag (zig ... end)) with `depth` constructors above the end.
Value spine(std::size_t depth) {
  Value v = zig_end();
  for (std::size_t k = 0; k < depth; ++k) v = k % 2 == 0 ? zag(v) : zig(v);
  return v;
}
}  // namespace

TEST(Multirec, ZigZagEndConformsOnlyAtZig) {
  EXPECT_TRUE(conform_mu(zigzag_code(), zig_index(), zigzag_end()));
  EXPECT_FALSE(conform_mu(zigzag_code(), zag_index(), zigzag_end()));
}

TEST(Multirec, SpineAlternatesIndices) {
  for (std::size_t d = 0; d <= 6; ++d) {
    const IndexLabel top = d % 2 == 0 ? zig_index() : zag_index();
    const IndexLabel other = d % 2 == 0 ? zag_index() : zig_index();
    EXPECT_TRUE(conform_mu(zigzag_code(), top, spine(d))) << d;
    EXPECT_FALSE(conform_mu(zigzag_code(), other, spine(d))) << d;
  }
  // two zags in a row break the alternation
  EXPECT_FALSE(conform_mu(zigzag_code(), zag_index(), zag(zag(zig_end()))));
}

TEST(Multirec, UnknownIndexIsAnError) {
  EXPECT_THROW(require_index(zigzag_code(), IndexLabel("nope")), IndexNotInSet);
}

TEST(Multirec, MapRespectsIndices) {
  // layer at zag is I@zig: only the zig transformer fires
  const IndexSet ix = zigzag_code().indices;
  const Value layer = Value::in2(Value::pair(Value::refl(), Value::payload("a", 0)));
  EXPECT_EQ(map(zigzag_code(), only_at(zig_index(), successor()), zag_index(), layer),
            Value::in2(Value::pair(Value::refl(), Value::payload("a", 1))));
  EXPECT_EQ(map(zigzag_code(), only_at(zag_index(), successor()), zag_index(), layer), layer);
  EXPECT_TRUE(wellformed(zigzag_code()));
  (void)ix;
}

TEST(Multirec, Prints) {
  EXPECT_EQ(to_string(zigzag_code()), "indices: inl.⋆ inr.⋆\n!inl.⋆ * (I@inr.⋆ + U) + !inr.⋆ * I@inl.⋆");
}

TEST(Multirec, EnumeratedZigValuesAreSpines) {
  const auto vs = oracle::enumerate_multirec_mu(zigzag_code(), zig_index(), oracle::EnumBudget{33, 64, 2});
  ASSERT_FALSE(vs.empty());
  EXPECT_EQ(vs.front(), spine(0));
  EXPECT_EQ(spine(2), zigzag_end());
  for (std::size_t d = 0; d <= 6; d += 2)
    EXPECT_NE(std::find(vs.begin(), vs.end(), spine(d)), vs.end()) << d;
}
