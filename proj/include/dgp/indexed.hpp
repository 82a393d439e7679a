#pragma once

// The Indexed-functors universe: codes indexed on inputs and outputs, with
// composition over a middle index set and an internal fixed point whose body
// reads parameters on the left and recursive occurrences on the right.

#include <map>
#include <memory>
#include <string>

#include "dgp/print.hpp"
#include "dgp/value.hpp"

namespace dgp::indexed {

class Code {
 public:
  enum class Op : std::uint8_t { Unit, Id, Tag, Sum, Prod, Comp, Fix };

  static Code unit(IndexSet in, IndexSet out) { return Code(Op::Unit, std::move(in), std::move(out), {}, nullptr, nullptr); }
  static Code id(IndexSet in, IndexSet out, IndexLabel i) {
    return Code(Op::Id, std::move(in), std::move(out), std::move(i), nullptr, nullptr);
  }
  static Code tag(IndexSet in, IndexSet out, IndexLabel o) {
    return Code(Op::Tag, std::move(in), std::move(out), std::move(o), nullptr, nullptr);
  }
  static Code sum(Code f, Code g) { return binary(Op::Sum, std::move(f), std::move(g)); }
  static Code prod(Code f, Code g) { return binary(Op::Prod, std::move(f), std::move(g)); }

  /// F : Code M O, G : Code I M gives F @ G : Code I O.
  static Code comp(Code f, Code g) {
    IndexSet in = g.in(), out = f.out();
    return Code(Op::Comp, std::move(in), std::move(out), {}, std::move(f.node_), std::move(g.node_));
  }

  /// F : Code (I ⊎ O) O gives Fix F : Code I O, with I read off F's Left labels.
  static Code fix(Code f) {
    IndexSet in;
    for (const auto& l : f.in())
      if (l.is_tagged() && l.side() == Side::Left) in.insert(l.untagged());
    IndexSet out = f.out();
    return Code(Op::Fix, std::move(in), std::move(out), {}, std::move(f.node_), nullptr);
  }

  Op op() const noexcept { return node_->op; }
  const IndexSet& in() const noexcept { return node_->in; }
  const IndexSet& out() const noexcept { return node_->out; }
  const IndexLabel& label() const noexcept { return node_->label; }
  /// Left operand, or the body of a Fix.
  Code lhs() const { return Code(node_->lhs); }
  Code rhs() const { return Code(node_->rhs); }
  Code body() const { return lhs(); }

  friend bool operator==(const Code& a, const Code& b) {
    if (a.node_ == b.node_) return true;
    if (a.op() != b.op() || a.label() != b.label() || a.in() != b.in() || a.out() != b.out())
      return false;
    if (a.node_->lhs && !(a.lhs() == b.lhs())) return false;
    if (a.node_->rhs && !(a.rhs() == b.rhs())) return false;
    return true;
  }

 private:
  struct Node {
    Op op;
    IndexSet in, out;
    IndexLabel label;
    std::shared_ptr<const Node> lhs, rhs;
  };
  static Code binary(Op op, Code f, Code g) {
    IndexSet in = f.in(), out = f.out();
    return Code(op, std::move(in), std::move(out), {}, std::move(f.node_), std::move(g.node_));
  }
  Code(Op op, IndexSet in, IndexSet out, IndexLabel label, std::shared_ptr<const Node> l,
       std::shared_ptr<const Node> r)
      : node_(std::make_shared<const Node>(
            Node{op, std::move(in), std::move(out), std::move(label), std::move(l), std::move(r)})) {}
  explicit Code(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

inline int precedence(const Code& c) {
  switch (c.op()) {
    case Code::Op::Sum: return print::kSum;
    case Code::Op::Prod: return print::kProd;
    case Code::Op::Comp: return print::kComp;
    case Code::Op::Fix: return print::kPrefix;
    default: return print::kAtom;
  }
}

/// Body text only; composition shows its middle set as `@{...}` unless it
/// equals the output set.
inline std::string body_to_string(const Code& c) {
  switch (c.op()) {
    case Code::Op::Unit: return "U";
    case Code::Op::Id: return "I@" + c.label().to_string();
    case Code::Op::Tag: return "!" + c.label().to_string();
    case Code::Op::Fix: return "fix " + print::wrap(body_to_string(c.body()), precedence(c.body()), print::kPrefix);
    case Code::Op::Sum:
    case Code::Op::Prod:
      return print::binary(c.op() == Code::Op::Sum ? "+" : "*", precedence(c), body_to_string(c.lhs()),
                           precedence(c.lhs()), body_to_string(c.rhs()), precedence(c.rhs()));
    case Code::Op::Comp: {
      std::string op = "@";
      if (c.lhs().in() != c.out()) op += "{" + c.lhs().in().to_string() + "}";
      return print::binary(op, print::kComp, body_to_string(c.lhs()), precedence(c.lhs()),
                           body_to_string(c.rhs()), precedence(c.rhs()));
    }
  }
  return "?";
}

/// "in: ..." and "out: ..." header lines followed by the body.
inline std::string to_string(const Code& c) {
  std::string in = "in:", out = "out:";
  if (!c.in().empty()) in += " " + c.in().to_string();
  if (!c.out().empty()) out += " " + c.out().to_string();
  return in + "\n" + out + "\n" + body_to_string(c);
}

/// Index-set side conditions hold at every node.
inline bool wellformed(const Code& c) {
  switch (c.op()) {
    case Code::Op::Unit: return true;
    case Code::Op::Id: return c.in().contains(c.label());
    case Code::Op::Tag: return c.out().contains(c.label());
    case Code::Op::Sum:
    case Code::Op::Prod:
      return c.lhs().in() == c.in() && c.lhs().out() == c.out() && c.rhs().in() == c.in() &&
             c.rhs().out() == c.out() && wellformed(c.lhs()) && wellformed(c.rhs());
    case Code::Op::Comp:
      return c.lhs().out() == c.out() && c.rhs().in() == c.in() && c.lhs().in() == c.rhs().out() &&
             wellformed(c.lhs()) && wellformed(c.rhs());
    case Code::Op::Fix:
      return c.body().in() == disjoint_union(c.in(), c.out()) && c.body().out() == c.out() &&
             wellformed(c.body());
  }
  return false;
}

// ---------------------------------------------------------------------------
// Slot assignments

class Slot;
using SlotAssignment = std::map<IndexLabel, Slot>;

/// What inhabits one input index: payload tokens, ⟦G⟧ r at, μ F r at, or nothing.
class Slot {
 public:
  enum class Tag : std::uint8_t { Payload, Interp, Mu, Empty };

  Slot(PayloadSlot p) : node_(std::make_shared<const Node>(Node{Tag::Payload, std::move(p), nullptr, nullptr, {}})) {}  // NOLINT
  Slot(EmptySlot) : node_(std::make_shared<const Node>(Node{Tag::Empty, {}, nullptr, nullptr, {}})) {}                      // NOLINT

  static Slot interp(Code code, SlotAssignment r, IndexLabel at) {
    return Slot(Tag::Interp, std::move(code), std::move(r), std::move(at));
  }
  /// μ fix_body r at.
  static Slot mu(Code fix_body, SlotAssignment r, IndexLabel at) {
    return Slot(Tag::Mu, std::move(fix_body), std::move(r), std::move(at));
  }

  Tag tag() const noexcept { return node_->tag; }
  const PayloadSlot& payload() const { return node_->payload; }
  const Code& code() const { return *node_->code; }
  const SlotAssignment& assignment() const { return *node_->r; }
  const IndexLabel& at() const { return node_->at; }

  std::string key() const;

 private:
  struct Node {
    Tag tag;
    PayloadSlot payload;
    std::shared_ptr<const Code> code;
    std::shared_ptr<const SlotAssignment> r;
    IndexLabel at;
  };
  Slot(Tag t, Code code, SlotAssignment r, IndexLabel at)
      : node_(std::make_shared<const Node>(Node{t, {}, std::make_shared<const Code>(std::move(code)),
                                                std::make_shared<const SlotAssignment>(std::move(r)),
                                                std::move(at)})) {}

  std::shared_ptr<const Node> node_;
};

inline std::string assignment_key(const SlotAssignment& r) {
  std::string out = "{";
  for (const auto& [label, slot] : r) out += label.to_string() + "=" + slot.key() + ";";
  return out + "}";
}

inline std::string Slot::key() const {
  switch (node_->tag) {
    case Tag::Payload: return "pay:" + node_->payload.sort;
    case Tag::Empty: return "empty";
    case Tag::Interp:
      return "interp(" + to_string(*node_->code) + "|" + assignment_key(*node_->r) + "|" + node_->at.to_string() + ")";
    case Tag::Mu:
      return "mu(" + to_string(*node_->code) + "|" + assignment_key(*node_->r) + "|" + node_->at.to_string() + ")";
  }
  return "?";
}

inline const Slot& lookup(const SlotAssignment& r, const IndexLabel& i) {
  const auto it = r.find(i);
  if (it == r.end()) throw IndexNotInSet(i.to_string());
  return it->second;
}

/// (r ∣ s): Left l ↦ r(l), Right l ↦ s(l).
inline SlotAssignment split_assign(const SlotAssignment& r, const SlotAssignment& s) {
  SlotAssignment out;
  for (const auto& [l, slot] : r) out.emplace(IndexLabel::left(l), slot);
  for (const auto& [l, slot] : s) out.emplace(IndexLabel::right(l), slot);
  return out;
}

/// Every label of `indices` sent to the same payload slot.
inline SlotAssignment payload_assignment(const IndexSet& indices, const PayloadSlot& slot) {
  SlotAssignment r;
  for (const auto& l : indices) r.emplace(l, slot);
  return r;
}

/// o ↦ μ fix_body r o for every output of the body.
inline SlotAssignment mu_assignment(const Code& fix_body, const SlotAssignment& r) {
  SlotAssignment s;
  for (const auto& o : fix_body.out()) s.emplace(o, Slot::mu(fix_body, r, o));
  return s;
}

/// m ↦ ⟦g⟧ r m for every output of `g`.
inline SlotAssignment interp_assignment(const Code& g, const SlotAssignment& r) {
  SlotAssignment s;
  for (const auto& m : g.out()) s.emplace(m, Slot::interp(g, r, m));
  return s;
}

/// (f ∥ g): Left l ↦ f at l, Right l ↦ g at l.
inline IxTransform split_transform(IxTransform f, IxTransform g) {
  return [f = std::move(f), g = std::move(g)](const IndexLabel& i, const Value& v) {
    if (!i.is_tagged()) throw IndexNotInSet(i.to_string());
    return i.side() == Side::Left ? f(i.untagged(), v) : g(i.untagged(), v);
  };
}

// ---------------------------------------------------------------------------
// Conformance and map

inline bool conform(const Code& code, const SlotAssignment& r, const IndexLabel& o, const Value& v);

inline bool slot_accepts(const Slot& s, const Value& v) {
  switch (s.tag()) {
    case Slot::Tag::Payload: return s.payload().accepts(v);
    case Slot::Tag::Empty: return false;
    case Slot::Tag::Interp: return conform(s.code(), s.assignment(), s.at(), v);
    case Slot::Tag::Mu:
      // μ F r o: <w> with w ∈ ⟦F⟧ (r ∣ μ F r) o
      return v.is(Kind::Roll) &&
             conform(s.code(), split_assign(s.assignment(), mu_assignment(s.code(), s.assignment())),
                     s.at(), v.child());
  }
  return false;
}

/// Does `v` inhabit ⟦code⟧ r o?
inline bool conform(const Code& code, const SlotAssignment& r, const IndexLabel& o, const Value& v) {
  if (!code.out().contains(o)) throw IndexNotInSet(o.to_string());
  switch (code.op()) {
    case Code::Op::Unit:
      return v.is(Kind::TT);
    case Code::Op::Id:
      return slot_accepts(lookup(r, code.label()), v);
    case Code::Op::Tag:
      return v.is(Kind::Refl) && o == code.label();
    case Code::Op::Sum:
      if (v.is(Kind::In1)) return conform(code.lhs(), r, o, v.child());
      if (v.is(Kind::In2)) return conform(code.rhs(), r, o, v.child());
      return false;
    case Code::Op::Prod:
      return v.is(Kind::Pair) && conform(code.lhs(), r, o, v.first()) &&
             conform(code.rhs(), r, o, v.second());
    case Code::Op::Comp:
      // ⟦F @ G⟧ r o = ⟦F⟧ (⟦G⟧ r) o
      return conform(code.lhs(), interp_assignment(code.rhs(), r), o, v);
    case Code::Op::Fix:
      return slot_accepts(Slot::mu(code.body(), r, o), v);
  }
  return false;
}

/// Lifts f : r ⇉ s to ⟦code⟧ r ⇉ ⟦code⟧ s at output `o`. Each Roll under a
/// Fix consumes one unit of fuel.
inline Value map(const Code& code, const IxTransform& f, const IndexLabel& o, const Value& v,
                 std::size_t fuel) {
  if (!code.out().contains(o)) throw IndexNotInSet(o.to_string());
  switch (code.op()) {
    case Code::Op::Unit:
      if (!v.is(Kind::TT)) throw MalformedValue("expected tt for U, got " + to_string(v));
      return v;
    case Code::Op::Id:
      return f(code.label(), v);
    case Code::Op::Tag:
      if (!v.is(Kind::Refl)) throw MalformedValue("expected refl for a tag, got " + to_string(v));
      return v;
    case Code::Op::Sum:
      if (v.is(Kind::In1)) return Value::in1(map(code.lhs(), f, o, v.child(), fuel));
      if (v.is(Kind::In2)) return Value::in2(map(code.rhs(), f, o, v.child(), fuel));
      throw MalformedValue("expected in1/in2 for " + body_to_string(code) + ", got " + to_string(v));
    case Code::Op::Prod:
      if (!v.is(Kind::Pair))
        throw MalformedValue("expected a pair for " + body_to_string(code) + ", got " + to_string(v));
      return Value::pair(map(code.lhs(), f, o, v.first(), fuel), map(code.rhs(), f, o, v.second(), fuel));
    case Code::Op::Comp: {
      // map (F @ G) f o x = map F (map G f) o x
      const Code g = code.rhs();
      const IxTransform inner = [&](const IndexLabel& m, const Value& x) { return map(g, f, m, x, fuel); };
      return map(code.lhs(), inner, o, v, fuel);
    }
    case Code::Op::Fix: {
      // map (Fix F) f o <x> = <map F (f ∥ map (Fix F) f) o x>
      if (!v.is(Kind::Roll))
        throw MalformedValue("expected <_> for " + body_to_string(code) + ", got " + to_string(v));
      const std::size_t rest = spend(fuel);
      const IxTransform again = [&](const IndexLabel& o2, const Value& x) { return map(code, f, o2, x, rest); };
      return Value::roll(map(code.body(), split_transform(f, again), o, v.child(), rest));
    }
  }
  throw MalformedValue("unknown code");
}

}  // namespace dgp::indexed
