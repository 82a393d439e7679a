#include <gtest/gtest.h>

#include "dgp/oracle/corpus.hpp"
#include "dgp/oracle/enumerate.hpp"
#include "dgp/oracle/grammar.hpp"
#include "dgp/oracle/properties.hpp"

using namespace dgp;
using namespace dgp::oracle;

TEST(Grammar, CountsBinaryTrees) {
  Grammar g;
  // T ::= tt | (T , T): Catalan numbers at odd sizes
  const std::size_t t = g.symbol("T", [](Grammar& gg) {
    const std::size_t self = gg.symbol("T", nullptr);
    return std::vector<Production>{Production::make_leaf(Value::tt()), Production::make_pair(self, self)};
  });
  EXPECT_EQ(g.exact(t, 1).size(), 1u);
  EXPECT_EQ(g.exact(t, 2).size(), 0u);
  EXPECT_EQ(g.exact(t, 3).size(), 1u);
  EXPECT_EQ(g.exact(t, 5).size(), 2u);
  EXPECT_EQ(g.exact(t, 7).size(), 5u);
  EXPECT_EQ(g.exact(t, 9).size(), 14u);
  EXPECT_EQ(g.up_to(t, 9).size(), 23u);
}

TEST(Grammar, UnproductiveCycleIsReported) {
  Grammar g;
  const std::size_t t = g.symbol("X", [](Grammar& gg) {
    return std::vector<Production>{Production::make_alias(gg.symbol("X", nullptr))};
  });
  EXPECT_THROW(g.exact(t, 3), Error);
}

TEST(Enumerator, OutputIsSortedAndDeterministic) {
  const Corpus c = standard_corpus();
  for (auto u : {embed::Universe::Regular, embed::Universe::PolyP, embed::Universe::Multirec, embed::Universe::Indexed,
                 embed::Universe::Instant}) {
    for (const auto& [name, st] : c.stages(u)) {
      const auto a = enumerate_stage(st, EnumBudget{10, 64, 2});
      const auto b = enumerate_stage(st, EnumBudget{10, 64, 2});
      EXPECT_EQ(a, b) << name;
      EXPECT_TRUE(std::is_sorted(a.begin(), a.end())) << name;
      EXPECT_EQ(std::adjacent_find(a.begin(), a.end()), a.end()) << name;
      for (const Value& v : a) EXPECT_LE(v.size(), 10u);
    }
  }
}

TEST(Enumerator, PayloadWidth) {
  const auto one = enumerate_polyp_mu(polyp::list_code(), PayloadSlot{"a"}, EnumBudget{7, 64, 1});
  const auto three = enumerate_polyp_mu(polyp::list_code(), PayloadSlot{"a"}, EnumBudget{7, 64, 3});
  EXPECT_EQ(one.size(), 2u);
  EXPECT_EQ(three.size(), 4u);
  // ⊤ has exactly one inhabitant whatever the width
  EXPECT_EQ(enumerate_polyp_mu(polyp::list_code(), PayloadSlot{"⊤"}, EnumBudget{7, 64, 3}).size(), 2u);
}

TEST(Enumerator, MaxUnfoldBoundsDepth) {
  const auto vs = enumerate_regular_mu(regular::nat_code(), EnumBudget{30, 3, 2});
  EXPECT_EQ(vs.size(), 3u);
}

TEST(Corpus, NamesAndShapes) {
  const Corpus c = standard_corpus();
  EXPECT_EQ(c.regular.size(), 3u);
  EXPECT_EQ(c.polyp.size(), 8u);
  EXPECT_EQ(c.multirec.size(), 4u);
  EXPECT_EQ(c.indexed.size(), 10u);
  EXPECT_NE(find_entry(c.instant, "List⊤"), nullptr);
  EXPECT_NE(find_entry(c.instant, "ZigZagC@inl.⋆"), nullptr);
  EXPECT_EQ(find_entry(c.polyp, "Nope"), nullptr);
  for (const auto& e : c.indexed) EXPECT_TRUE(indexed::wellformed(e.code)) << e.name;
  for (const auto& e : c.instant) EXPECT_TRUE(instant::env_check(e.env)) << e.name;
}

TEST(Properties, UnknownNameThrows) {
  EXPECT_THROW(run_property("no-such-law", standard_corpus(), EnumBudget{}), UnknownProperty);
}

TEST(Properties, FailuresKeepTheFirstWitness) {
  ConversionReport rep{"demo", 0, {}};
  for (std::uint64_t n = 0; n < 4; ++n)
    detail::check(rep, "E", Value::payload("a", n), "fwd", [&]() -> std::optional<std::string> {
      if (n < 2) return std::nullopt;
      if (n == 2) return "bad";
      throw MalformedValue("worse");
    });
  EXPECT_EQ(rep.checked, 4u);
  ASSERT_EQ(rep.failures.size(), 2u);
  EXPECT_EQ(to_string(rep), "demo: 4 checked, 2 failures\n  first: E fwd a#2: bad");
}

TEST(Properties, EveryRegisteredPropertyHoldsAtSizeTwelve) {
  const Corpus c = standard_corpus();
  for (const auto& name : property_names()) {
    const ConversionReport r = run_property(name, c, EnumBudget{12, 64, 2});
    EXPECT_TRUE(r.ok()) << to_string(r);
    EXPECT_GT(r.checked, 0u) << name;
  }
}

// Past the acceptance sizes, on the arrows with the most structure.
TEST(Properties, IsoSuitesHoldDeeper) {
  const Corpus c = standard_corpus();
  for (const char* name : {"isoMu-r-p", "iso-r-m", "iso-p-i", "iso-m-i", "iso-i-ig", "iso2-p-i", "iso2-i-ig",
                           "transport-p-i", "transport-i-ig"}) {
    const ConversionReport r = run_property(name, c, EnumBudget{16, 64, 2});
    EXPECT_TRUE(r.ok()) << to_string(r);
  }
}

// A broken converter is caught: pretend from_r forgets to roll.
TEST(Properties, DetectsABrokenRoundTrip) {
  ConversionReport rep{"broken", 0, {}};
  for (const Value& v : enumerate_regular_mu(regular::nat_code(), EnumBudget{9, 64, 2}))
    detail::check(rep, "NatC", v, "fwd;bwd", [&]() {
      const Value w = v.child();  // dropped the outer roll
      return detail::expect_equal(w, v);
    });
  EXPECT_EQ(rep.failures.size(), 4u);
  EXPECT_EQ(to_string(rep.failures.front().input), "<in1 tt>");
}
