#include <gtest/gtest.h>

#include "dgp/instant.hpp"
#include "dgp/oracle/enumerate.hpp"

using namespace dgp;
using namespace dgp::instant;

TEST(Instant, SizeOfAListIsTwo) {
  const CodeEnv env = list_top_env();
  const Code c = env.at(kListTopName);
  ASSERT_TRUE(conform(env, c, a_list(), 10));
  EXPECT_EQ(size(env, c, a_list(), 10), 2u);
  EXPECT_EQ(size(env, c, top_list(3), 10), 3u);
  EXPECT_EQ(size(env, c, top_list(0), 10), 0u);
}

TEST(Instant, FuelIsSpentPerUnfolding) {
  const CodeEnv env = list_top_env();
  const Code c = env.at(kListTopName);
  EXPECT_THROW(conform(env, c, a_list(), 1), FuelExhausted);
  EXPECT_THROW(size(env, c, a_list(), 1), FuelExhausted);
  EXPECT_TRUE(conform(env, c, a_list(), 2));
}

TEST(Instant, ConformChecksKSets) {
  const CodeEnv env = list_top_env();
  EXPECT_TRUE(conform(env, Code::k(KSet::prim("a")), Value::konst(Value::payload("a", 0)), 1));
  EXPECT_FALSE(conform(env, Code::k(KSet::prim("a")), Value::payload("a", 0), 1));
  EXPECT_TRUE(conform(env, Code::k(KSet::eq(star(), star())), Value::konst(Value::refl()), 1));
  EXPECT_FALSE(conform(env, Code::k(KSet::eq(star(), IndexLabel("x"))), Value::konst(Value::refl()), 1));
  EXPECT_TRUE(conform(env, Code::k(KSet::of_code(kListTopName)), Value::konst(top_list(0)), 2));
}

TEST(Instant, EnvCheck) {
  EXPECT_TRUE(env_check(list_top_env()));
  EXPECT_TRUE(env_check(CodeEnv{}));
  CodeEnv dangling;
  dangling.define("A", Code::sum(Code::unit(), Code::r("B")));
  EXPECT_FALSE(env_check(dangling));
  dangling.define("B", Code::k(KSet::of_code("A")));
  EXPECT_TRUE(env_check(dangling));
  EXPECT_THROW(dangling.at("C"), MalformedValue);
}

TEST(Instant, DefineReplacesInPlace) {
  CodeEnv env;
  env.define("A", Code::unit());
  env.define("B", Code::unit());
  env.define("A", Code::r("B"));
  EXPECT_EQ(to_string(env), "A = R B\nB = U\n");
}

TEST(Instant, Prints) {
  EXPECT_EQ(to_string(list_top_env()), "List⊤ = U + K \"⊤\" * R List⊤\n");
  EXPECT_EQ(to_string(Code::k(KSet::eq(IndexLabel::left(star()), star()))), "K!(inl.⋆, ⋆)");
  EXPECT_EQ(to_string(Code::k(KSet::of_code("T"))), "K@T");
}

TEST(Instant, CrushMax) {
  // longest run of recursion: here just the list length
  const CrushSpec<std::uint64_t> depth{[](std::uint64_t a, std::uint64_t b) { return std::max(a, b); },
                                       [](std::uint64_t a) { return a + 1; }, 0};
  const CodeEnv env = list_top_env();
  EXPECT_EQ(crush(env, env.at(kListTopName), depth, top_list(4), 10), 4u);
}

TEST(Instant, EnumeratedListsMatchTopList) {
  const CodeEnv env = list_top_env();
  const auto vs = oracle::enumerate_instant(env, env.at(kListTopName), oracle::EnumBudget{12, 64, 2});
  // in1 tt (2), then each element adds 5 nodes
  ASSERT_EQ(vs.size(), 3u);
  for (std::size_t n = 0; n < vs.size(); ++n) EXPECT_EQ(vs[n], top_list(n));
}
