#pragma once

// The named example codes every suite runs over. Codes lifted from a lower
// universe keep their name, so "NatC" names a code in each universe.

#include <optional>
#include <string>
#include <vector>

#include "dgp/embed/path.hpp"

namespace dgp::oracle {

struct RegularEntry {
  std::string name;
  regular::Code code;
};

struct PolyPEntry {
  std::string name;
  polyp::Code code;
  PayloadSlot param;
};

struct MultirecEntry {
  std::string name;
  multirec::Code code;
};

struct IndexedEntry {
  std::string name;
  indexed::Code code;
  indexed::SlotAssignment r;
};

struct InstantEntry {
  std::string name;
  instant::CodeEnv env;
  instant::Code code;
};

struct Corpus {
  std::vector<RegularEntry> regular;
  std::vector<PolyPEntry> polyp;
  std::vector<MultirecEntry> multirec;
  std::vector<IndexedEntry> indexed;
  std::vector<InstantEntry> instant;

  /// Source stages of a universe: one per entry, or per entry and index
  /// (Multirec) or output (Indexed).
  std::vector<std::pair<std::string, embed::Stage>> stages(embed::Universe u) const {
    std::vector<std::pair<std::string, embed::Stage>> out;
    switch (u) {
      case embed::Universe::Regular:
        for (const auto& e : regular) out.emplace_back(e.name, embed::RegularStage{e.code});
        break;
      case embed::Universe::PolyP:
        for (const auto& e : polyp) out.emplace_back(e.name, embed::PolyPStage{e.code, e.param});
        break;
      case embed::Universe::Multirec:
        for (const auto& e : multirec)
          for (const auto& i : e.code.indices)
            out.emplace_back(e.name + "@" + i.to_string(), embed::MultirecStage{e.code, i});
        break;
      case embed::Universe::Indexed:
        for (const auto& e : indexed)
          for (const auto& o : e.code.out())
            out.emplace_back(e.name + "@" + o.to_string(), embed::IndexedStage{e.code, e.r, o});
        break;
      case embed::Universe::Instant:
        for (const auto& e : instant) out.emplace_back(e.name, embed::InstantStage{e.env, e.code});
        break;
    }
    return out;
  }
};

template <class Entry>
const Entry* find_entry(const std::vector<Entry>& entries, const std::string& name) {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

// Codes beyond the worked examples.

/// U + I * I, unlabelled binary trees.
inline regular::Code btree_code() {
  using regular::Code;
  return Code::sum(Code::unit(), Code::prod(Code::id(), Code::id()));
}

/// U + (U + I) * I, lists of optional children.
inline regular::Code mixed_code() {
  using regular::Code;
  return Code::sum(Code::unit(), Code::prod(Code::sum(Code::unit(), Code::id()), Code::id()));
}

/// TreeC @ ListC, the composition that does not mean "trees of lists".
inline polyp::Code naive_tree_of_lists_code() { return polyp::Code::comp(polyp::tree_code(), polyp::list_code()); }

/// Lists of (a, b) pairs written directly as an indexed code:
/// in: a b; out: ⋆; fix (U + I@inl.a * I@inl.b * I@inr.⋆)
inline indexed::Code pair_list_code() {
  using indexed::Code;
  const IndexSet outer{IndexLabel("a"), IndexLabel("b")};
  const IndexSet in = disjoint_union(outer, unit_index_set());
  const IndexSet out = unit_index_set();
  const Code body = Code::sum(
      Code::unit(in, out),
      Code::prod(Code::id(in, out, IndexLabel::left(IndexLabel("a"))),
                 Code::prod(Code::id(in, out, IndexLabel::left(IndexLabel("b"))),
                            Code::id(in, out, IndexLabel::right(star())))));
  return Code::fix(body);
}

/// Witness for the composition pitfall: a leaf holding the one-element list [a#0].
inline Value tree_of_lists_witness() {
  const Value nil = Value::roll(Value::in1(Value::tt()));
  const Value list = Value::roll(Value::in2(Value::pair(Value::payload("a", 0), nil)));
  return Value::roll(Value::in1(list));
}

inline const std::string kDefaultParamSort = "a";

inline Corpus standard_corpus() {
  Corpus c;
  c.regular = {{"NatC", regular::nat_code()}, {"BTreeC", btree_code()}, {"MixC", mixed_code()}};

  const PayloadSlot a{kDefaultParamSort};
  c.polyp = {{"ListC", polyp::list_code(), a},
             {"RoseC", polyp::rose_code(), a},
             {"TreeC", polyp::tree_code(), a},
             {"TreeListC", polyp::tree_of_lists_code(), a},
             {"NaiveTreeListC", naive_tree_of_lists_code(), a}};
  for (const auto& e : c.regular) c.polyp.push_back({e.name, embed::lift_r_to_p(e.code), embed::bottom_param()});

  c.multirec = {{"ZigZagC", multirec::zigzag_code()}};
  for (const auto& e : c.regular) c.multirec.push_back({e.name, embed::lift_r_to_m(e.code)});

  for (const auto& e : c.polyp)
    c.indexed.push_back({e.name, embed::lift_p_to_i_mu(e.code), embed::polyp_mu_assignment(e.param)});
  c.indexed.push_back({"ZigZagC", embed::lift_m_to_i_mu(multirec::zigzag_code()), {}});
  c.indexed.push_back({"PairListC", pair_list_code(),
                       {{IndexLabel("a"), PayloadSlot{"a"}}, {IndexLabel("b"), PayloadSlot{"b"}}}});

  c.instant.push_back({instant::kListTopName, instant::list_top_env(),
                       instant::list_top_env().at(instant::kListTopName)});
  for (const auto& e : c.indexed) {
    embed::IgLift l = embed::lift_i_to_ig(e.code, embed::kset_assignment(e.r));
    for (const auto& o : e.code.out()) {
      const std::string name = e.code.out().size() == 1 ? e.name : e.name + "@" + o.to_string();
      c.instant.push_back({name, l.env, l.roots.at(o)});
    }
  }
  return c;
}

}  // namespace dgp::oracle
