#include <gtest/gtest.h>

#include "dgp/dsl.hpp"
#include "dgp/oracle/corpus.hpp"
#include "dgp/oracle/enumerate.hpp"

using namespace dgp;
using namespace dgp::dsl;

TEST(Dsl, ParsesValues) {
  EXPECT_EQ(parse_value("<in2 <in2 <in1 tt>>>"), regular::a_nat());
  EXPECT_EQ(parse_value("(tt , refl)"), Value::pair(Value::tt(), Value::refl()));
  EXPECT_EQ(parse_value("a#3"), Value::payload("a", 3));
  EXPECT_EQ(parse_value("  rec   in2 (k ⊤#0,rec in1 tt) "),
            Value::rec(Value::in2(Value::pair(Value::konst(Value::payload("⊤", 0)), Value::rec(Value::in1(Value::tt()))))));
}

TEST(Dsl, ParsesCodes) {
  EXPECT_EQ(parse_regular("U + I"), regular::nat_code());
  EXPECT_EQ(parse_polyp("P * (U + P * I) @ I"), polyp::rose_code());
  EXPECT_EQ(parse_polyp("P * ((U + (P * I)) @ I)"), polyp::rose_code());
  EXPECT_EQ(parse_polyp("(U + P * I) @ P + I * I"), polyp::tree_of_lists_code());
  EXPECT_EQ(parse_multirec("indices: inl.⋆ inr.⋆\n!inl.⋆ * (I@inr.⋆ + U) + !inr.⋆ * I@inl.⋆"),
            multirec::zigzag_code());
  EXPECT_EQ(parse_indexed("in: a b; out: ⋆; fix (U + I@inl.a * I@inl.b * I@inr.⋆)"), oracle::pair_list_code());
  EXPECT_EQ(parse_env("# lists\n\nList⊤ = U + K \"⊤\" * R List⊤\n"), instant::list_top_env());
}

TEST(Dsl, OperatorsAreRightAssociative) {
  using regular::Code;
  EXPECT_EQ(parse_regular("U + U + I"), Code::sum(Code::unit(), Code::sum(Code::unit(), Code::id())));
  EXPECT_EQ(parse_regular("I * I + U"), Code::sum(Code::prod(Code::id(), Code::id()), Code::unit()));
}

TEST(Dsl, ExplicitMiddleIndices) {
  const indexed::Code c = parse_indexed("in: ⋆\nout: ⋆\nU @{x y} I@⋆ * I@⋆");
  EXPECT_EQ(indexed::to_string(c), "in: ⋆\nout: ⋆\nU @{x y} I@⋆ * I@⋆");
  EXPECT_EQ(parse_indexed(indexed::to_string(c)), c);
}

TEST(Dsl, ErrorsCarryPositionAndExpectations) {
  try {
    parse_regular("U +");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 4u);
    EXPECT_EQ(e.expected(), (std::vector<std::string>{"U", "I", "'('"}));
  }
  try {
    parse_indexed("in: ⋆\nout: ⋆\nU + I@nope");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 5u);
  }
}

TEST(Dsl, Rejects) {
  for (const char* bad : {"U +", "U * * I", "(U + I", "U I", "P", "", "U + )"})
    EXPECT_THROW(parse_regular(bad), ParseError) << bad;
  for (const char* bad : {"I @", "I @ ", "P @", "U @{a} U"}) EXPECT_THROW(parse_polyp(bad), ParseError) << bad;
  EXPECT_THROW(parse_multirec("U + I@⋆"), ParseError);
  EXPECT_THROW(parse_multirec("indices: ⋆\nI@x"), ParseError);
  EXPECT_THROW(parse_multirec("indices: ⋆\nI @⋆"), ParseError);
  EXPECT_THROW(parse_indexed("in: ⋆\nout: ⋆\n!x"), ParseError);
  EXPECT_THROW(parse_instant("K"), ParseError);
  EXPECT_THROW(parse_instant("K \"a"), ParseError);
  EXPECT_THROW(parse_env("A = U\nB = U +\n"), ParseError);
  EXPECT_THROW(parse_value("a#"), ParseError);
  EXPECT_THROW(parse_value("(tt tt)"), ParseError);
  EXPECT_THROW(parse_value("tt tt"), ParseError);
  EXPECT_THROW(parse_value("$"), ParseError);
}

TEST(Dsl, EnvErrorsReportTheirLine) {
  try {
    parse_env("A = U\n\nB = U +\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(Dsl, Labels) {
  EXPECT_EQ(parse_label("inl.inr.a"), IndexLabel::left(IndexLabel::right(IndexLabel("a"))));
  EXPECT_EQ(parse_label("⋆"), star());
  EXPECT_EQ(parse_label("inl."), IndexLabel("inl."));
}

TEST(Dsl, CorpusCodesRoundTrip) {
  const oracle::Corpus c = oracle::standard_corpus();
  for (const auto& e : c.regular) EXPECT_EQ(parse_regular(regular::to_string(e.code)), e.code) << e.name;
  for (const auto& e : c.polyp) EXPECT_EQ(parse_polyp(polyp::to_string(e.code)), e.code) << e.name;
  for (const auto& e : c.multirec) EXPECT_EQ(parse_multirec(multirec::to_string(e.code)), e.code) << e.name;
  for (const auto& e : c.indexed) EXPECT_EQ(parse_indexed(indexed::to_string(e.code)), e.code) << e.name;
  for (const auto& e : c.instant) {
    EXPECT_EQ(parse_env(instant::to_string(e.env)), e.env) << e.name;
    EXPECT_EQ(parse_instant(instant::to_string(e.code)), e.code) << e.name;
  }
}

TEST(Dsl, PrintIsCanonical) {
  EXPECT_EQ(regular::to_string(parse_regular("((U)+(I *I))")), "U + I * I");
  EXPECT_EQ(to_string(parse_value("( tt ,<in1 tt> )")), "(tt , <in1 tt>)");
}

TEST(Dsl, EnumeratedValuesRoundTrip) {
  const oracle::Corpus c = oracle::standard_corpus();
  std::size_t n = 0;
  for (auto u : {embed::Universe::Regular, embed::Universe::PolyP, embed::Universe::Multirec, embed::Universe::Indexed,
                 embed::Universe::Instant})
    for (const auto& [name, st] : c.stages(u))
      for (const Value& v : oracle::enumerate_stage(st, oracle::EnumBudget{10, 64, 2})) {
        EXPECT_EQ(parse_value(to_string(v)), v) << name;
        ++n;
      }
  EXPECT_EQ(n, 97u);
}
