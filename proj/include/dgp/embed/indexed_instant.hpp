#pragma once

// Indexed → Instant Generics. Inputs become constants, tags become equality
// constants, and both composition and Fix become R references into a code
// environment. Generated entries are named ig0, ig1, ... in the order they
// are first needed and memoised on (code, assignment, output), so recursive
// codes produce finite environments and output is reproducible.

#include <map>
#include <set>
#include <string>

#include "dgp/embed/regular_polyp.hpp"
#include "dgp/indexed.hpp"
#include "dgp/instant.hpp"

namespace dgp::embed {

/// What an input index turns into: a constant K set, or (inside a Fix body,
/// for the recursive positions) a direct R reference.
struct IgSlot {
  instant::KSet kset;
  std::string direct;  // nonempty: emit R direct

  static IgSlot constant(instant::KSet s) { return IgSlot{std::move(s), {}}; }
  static IgSlot rec(std::string name) { return IgSlot{{}, std::move(name)}; }
  bool is_direct() const noexcept { return !direct.empty(); }
};

using IgAssignment = std::map<IndexLabel, IgSlot>;

/// Input-side K sets for a payload-only slot assignment: sort s ↦ K "s", empty ↦ K "⊥".
inline std::map<IndexLabel, instant::KSet> kset_assignment(const indexed::SlotAssignment& r) {
  std::map<IndexLabel, instant::KSet> out;
  for (const auto& [l, slot] : r) {
    switch (slot.tag()) {
      case indexed::Slot::Tag::Payload: out.emplace(l, instant::KSet::prim(slot.payload().sort)); break;
      case indexed::Slot::Tag::Empty: out.emplace(l, instant::KSet::prim(kBottomSort)); break;
      default: throw MalformedValue("only payload slots can become constants (index " + l.to_string() + ")");
    }
  }
  return out;
}

class IgLifter {
 public:
  explicit IgLifter(instant::CodeEnv env = {}) : env_(std::move(env)) {}

  /// ↑ code r o
  instant::Code lift(const indexed::Code& c, const IgAssignment& r, const IndexLabel& o) {
    using Op = indexed::Code::Op;
    using instant::Code;
    switch (c.op()) {
      case Op::Unit: return Code::unit();
      case Op::Id: {
        const auto it = r.find(c.label());
        if (it == r.end()) throw IndexNotInSet(c.label().to_string());
        return it->second.is_direct() ? Code::r(it->second.direct) : Code::k(it->second.kset);
      }
      case Op::Tag: return Code::k(instant::KSet::eq(o, c.label()));
      case Op::Sum: return Code::sum(lift(c.lhs(), r, o), lift(c.rhs(), r, o));
      case Op::Prod: return Code::prod(lift(c.lhs(), r, o), lift(c.rhs(), r, o));
      case Op::Comp: return Code::r(lift_comp(c, r, o));
      case Op::Fix: return Code::r(lift_fix(c, r, o));
    }
    throw MalformedValue("unknown code");
  }

  const instant::CodeEnv& env() const noexcept { return env_; }

 private:
  static std::string key(const IgAssignment& r) {
    std::string out;
    for (const auto& [l, s] : r)
      out += l.to_string() + "=" + (s.is_direct() ? "R " + s.direct : instant::to_string(s.kset)) + ";";
    return out;
  }

  /// Reserves a fresh name, keeping the environment's order equal to allocation order.
  std::string reserve() {
    std::string name;
    do name = "ig" + std::to_string(counter_++);
    while (env_.contains(name));
    env_.define(name, instant::Code::unit());
    return name;
  }

  // ↑ (F @ G) r o = R (↑F (m ↦ ⟦↑G r m⟧) o)
  std::string lift_comp(const indexed::Code& c, const IgAssignment& r, const IndexLabel& o) {
    const std::string k = "comp|" + indexed::to_string(c) + "|" + key(r) + "|" + o.to_string();
    if (const auto it = memo_.find(k); it != memo_.end()) return it->second;
    const std::string name = reserve();
    memo_.emplace(k, name);
    const indexed::Code g = c.rhs();
    IgAssignment rf;
    for (const auto& m : g.out()) rf.emplace(m, IgSlot::constant(instant::KSet::of_code(lift_interp(g, r, m))));
    env_.define(name, lift(c.lhs(), rf, o));
    return name;
  }

  std::string lift_interp(const indexed::Code& g, const IgAssignment& r, const IndexLabel& m) {
    const std::string k = "interp|" + indexed::to_string(g) + "|" + key(r) + "|" + m.to_string();
    if (const auto it = memo_.find(k); it != memo_.end()) return it->second;
    const std::string name = reserve();
    memo_.emplace(k, name);
    env_.define(name, lift(g, r, m));
    return name;
  }

  // ↑ (Fix F) r o = R X_o with X_o' = ↑F (r ∣ o' ↦ R X_o') o' for every output o'
  std::string lift_fix(const indexed::Code& c, const IgAssignment& r, const IndexLabel& o) {
    const std::string k = "fix|" + indexed::to_string(c) + "|" + key(r);
    auto it = fix_memo_.find(k);
    if (it == fix_memo_.end()) {
      std::map<IndexLabel, std::string> names;
      for (const auto& out : c.out()) names.emplace(out, reserve());
      it = fix_memo_.emplace(k, names).first;
      IgAssignment rf;
      for (const auto& [l, s] : r) rf.emplace(IndexLabel::left(l), s);
      for (const auto& [out, name] : names) rf.emplace(IndexLabel::right(out), IgSlot::rec(name));
      for (const auto& out : c.out()) env_.define(names.at(out), lift(c.body(), rf, out));
    }
    const auto found = it->second.find(o);
    if (found == it->second.end()) throw IndexNotInSet(o.to_string());
    return found->second;
  }

  instant::CodeEnv env_;
  std::size_t counter_ = 0;
  std::map<std::string, std::string> memo_;
  std::map<std::string, std::map<IndexLabel, std::string>> fix_memo_;
};

/// One Instant-Generics root code per output index, plus the environment they live in.
struct IgLift {
  std::map<IndexLabel, instant::Code> roots;
  instant::CodeEnv env;
};

inline IgLift lift_i_to_ig(const indexed::Code& c, const std::map<IndexLabel, instant::KSet>& r,
                           instant::CodeEnv env = {}) {
  IgAssignment ig;
  for (const auto& [l, s] : r) ig.emplace(l, IgSlot::constant(s));
  IgLifter lifter(std::move(env));
  IgLift out;
  for (const auto& o : c.out()) out.roots.emplace(o, lifter.lift(c, ig, o));
  out.env = lifter.env();
  return out;
}

namespace detail {

/// Inputs of a Fix body that are direct: the outer direct ones on the left,
/// every recursive position on the right.
inline std::set<IndexLabel> fix_direct(const indexed::Code& fix, const std::set<IndexLabel>& direct) {
  std::set<IndexLabel> out;
  for (const auto& l : direct) out.insert(IndexLabel::left(l));
  for (const auto& o : fix.out()) out.insert(IndexLabel::right(o));
  return out;
}

}  // namespace detail

/// from C o x; `direct` names the inputs lifted to R rather than K.
inline Value from_i_ig(const indexed::Code& c, const std::set<IndexLabel>& direct, const IndexLabel& o,
                       const Value& x, std::size_t fuel) {
  using Op = indexed::Code::Op;
  if (!c.out().contains(o)) throw IndexNotInSet(o.to_string());
  switch (c.op()) {
    case Op::Unit:
      if (!x.is(Kind::TT)) throw MalformedValue("expected tt for U, got " + to_string(x));
      return x;
    case Op::Id:
      return direct.contains(c.label()) ? x : Value::konst(x);
    case Op::Tag:
      if (!x.is(Kind::Refl)) throw MalformedValue("expected refl for a tag, got " + to_string(x));
      return Value::konst(x);
    case Op::Sum:
      if (x.is(Kind::In1)) return Value::in1(from_i_ig(c.lhs(), direct, o, x.child(), fuel));
      if (x.is(Kind::In2)) return Value::in2(from_i_ig(c.rhs(), direct, o, x.child(), fuel));
      throw MalformedValue("expected in1/in2 for " + indexed::body_to_string(c) + ", got " + to_string(x));
    case Op::Prod:
      if (!x.is(Kind::Pair))
        throw MalformedValue("expected a pair for " + indexed::body_to_string(c) + ", got " + to_string(x));
      return Value::pair(from_i_ig(c.lhs(), direct, o, x.first(), fuel),
                         from_i_ig(c.rhs(), direct, o, x.second(), fuel));
    case Op::Comp: {
      // from (F @ G) o x = rec (from F o (map_i F (from G) o x))
      const indexed::Code g = c.rhs();
      const IxTransform inner = [&](const IndexLabel& m, const Value& y) { return from_i_ig(g, direct, m, y, fuel); };
      return Value::rec(from_i_ig(c.lhs(), {}, o, indexed::map(c.lhs(), inner, o, x, fuel), fuel));
    }
    case Op::Fix: {
      // from (Fix F) o <x> = rec (from F o (map_i F (id ∥ from (Fix F)) o x))
      if (!x.is(Kind::Roll))
        throw MalformedValue("expected <_> for " + indexed::body_to_string(c) + ", got " + to_string(x));
      const std::size_t rest = spend(fuel);
      const IxTransform t = indexed::split_transform(
          identity_ix(), [&](const IndexLabel& o2, const Value& y) { return from_i_ig(c, direct, o2, y, rest); });
      return Value::rec(from_i_ig(c.body(), detail::fix_direct(c, direct), o,
                                  indexed::map(c.body(), t, o, x.child(), rest), rest));
    }
  }
  throw MalformedValue("unknown code");
}

/// to C o y, the inverse of from.
inline Value to_i_ig(const indexed::Code& c, const std::set<IndexLabel>& direct, const IndexLabel& o,
                     const Value& y, std::size_t fuel) {
  using Op = indexed::Code::Op;
  if (!c.out().contains(o)) throw IndexNotInSet(o.to_string());
  switch (c.op()) {
    case Op::Unit:
      if (!y.is(Kind::TT)) throw MalformedValue("expected tt for U, got " + to_string(y));
      return y;
    case Op::Id:
      if (direct.contains(c.label())) return y;
      if (!y.is(Kind::Konst)) throw MalformedValue("expected k _ at I@" + c.label().to_string() + ", got " + to_string(y));
      return y.child();
    case Op::Tag:
      if (!y.is(Kind::Konst) || !y.child().is(Kind::Refl))
        throw MalformedValue("expected k refl for a tag, got " + to_string(y));
      return y.child();
    case Op::Sum:
      if (y.is(Kind::In1)) return Value::in1(to_i_ig(c.lhs(), direct, o, y.child(), fuel));
      if (y.is(Kind::In2)) return Value::in2(to_i_ig(c.rhs(), direct, o, y.child(), fuel));
      throw MalformedValue("expected in1/in2 for " + indexed::body_to_string(c) + ", got " + to_string(y));
    case Op::Prod:
      if (!y.is(Kind::Pair))
        throw MalformedValue("expected a pair for " + indexed::body_to_string(c) + ", got " + to_string(y));
      return Value::pair(to_i_ig(c.lhs(), direct, o, y.first(), fuel), to_i_ig(c.rhs(), direct, o, y.second(), fuel));
    case Op::Comp: {
      // to (F @ G) o (rec y) = map_i F (to G) o (to F o y)
      if (!y.is(Kind::RecV))
        throw MalformedValue("expected rec _ for " + indexed::body_to_string(c) + ", got " + to_string(y));
      const indexed::Code g = c.rhs();
      const IxTransform inner = [&](const IndexLabel& m, const Value& z) { return to_i_ig(g, direct, m, z, fuel); };
      return indexed::map(c.lhs(), inner, o, to_i_ig(c.lhs(), {}, o, y.child(), fuel), fuel);
    }
    case Op::Fix: {
      // to (Fix F) o (rec y) = <map_i F (id ∥ to (Fix F)) o (to F o y)>
      if (!y.is(Kind::RecV))
        throw MalformedValue("expected rec _ for " + indexed::body_to_string(c) + ", got " + to_string(y));
      const std::size_t rest = spend(fuel);
      const IxTransform t = indexed::split_transform(
          identity_ix(), [&](const IndexLabel& o2, const Value& z) { return to_i_ig(c, direct, o2, z, rest); });
      return Value::roll(
          indexed::map(c.body(), t, o, to_i_ig(c.body(), detail::fix_direct(c, direct), o, y.child(), rest), rest));
    }
  }
  throw MalformedValue("unknown code");
}

}  // namespace dgp::embed
