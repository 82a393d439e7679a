#pragma once

// The PolyP universe: bifunctor codes over one parameter (P) and one
// recursive position (I), with composition F @ G interpreted as
// μ F (⟦G⟧ A R).

#include <memory>
#include <string>
#include <variant>

#include "dgp/print.hpp"
#include "dgp/value.hpp"

namespace dgp::polyp {

class Code {
 public:
  enum class Op : std::uint8_t { Unit, Par, Id, Sum, Prod, Comp };

  static Code unit() { return leaf(Op::Unit); }
  static Code par() { return leaf(Op::Par); }
  static Code id() { return leaf(Op::Id); }
  static Code sum(Code f, Code g) { return Code(Op::Sum, std::move(f.node_), std::move(g.node_)); }
  static Code prod(Code f, Code g) { return Code(Op::Prod, std::move(f.node_), std::move(g.node_)); }
  static Code comp(Code f, Code g) { return Code(Op::Comp, std::move(f.node_), std::move(g.node_)); }

  Op op() const noexcept { return node_->op; }
  Code lhs() const { return Code(node_->lhs); }
  Code rhs() const { return Code(node_->rhs); }
  bool is_leaf() const noexcept { return node_->lhs == nullptr; }

  friend bool operator==(const Code& a, const Code& b) {
    if (a.node_ == b.node_) return true;
    if (a.op() != b.op()) return false;
    if (a.is_leaf()) return true;
    return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }

 private:
  struct Node {
    Op op;
    std::shared_ptr<const Node> lhs, rhs;
  };
  static Code leaf(Op op) { return Code(op, nullptr, nullptr); }
  Code(Op op, std::shared_ptr<const Node> l, std::shared_ptr<const Node> r)
      : node_(std::make_shared<const Node>(Node{op, std::move(l), std::move(r)})) {}
  explicit Code(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

inline int precedence(const Code& c) {
  switch (c.op()) {
    case Code::Op::Sum: return print::kSum;
    case Code::Op::Prod: return print::kProd;
    case Code::Op::Comp: return print::kComp;
    default: return print::kAtom;
  }
}

inline std::string to_string(const Code& c) {
  switch (c.op()) {
    case Code::Op::Unit: return "U";
    case Code::Op::Par: return "P";
    case Code::Op::Id: return "I";
    default: break;
  }
  const char* op = c.op() == Code::Op::Sum ? "+" : c.op() == Code::Op::Prod ? "*" : "@";
  return print::binary(op, precedence(c), to_string(c.lhs()), precedence(c.lhs()),
                       to_string(c.rhs()), precedence(c.rhs()));
}

struct SlotNode;

/// Describes the inhabitants of a parameter or recursive position: payload
/// tokens, nothing, μ F A, or ⟦G⟧ A R. Cheap to copy.
class Slot {
 public:
  Slot(PayloadSlot p);  // NOLINT(google-explicit-constructor)
  Slot(EmptySlot e);    // NOLINT(google-explicit-constructor)

  /// μ code param.
  static Slot mu(Code code, Slot param);
  /// ⟦code⟧ param rec.
  static Slot interp(Code code, Slot param, Slot rec);

  const SlotNode& node() const { return *node_; }
  std::string key() const;

 private:
  explicit Slot(std::shared_ptr<const SlotNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const SlotNode> node_;
};

struct SlotNode {
  enum class Tag : std::uint8_t { Payload, Empty, Mu, Interp } tag;
  PayloadSlot payload;
  std::shared_ptr<const Code> code;
  std::shared_ptr<const Slot> param;
  std::shared_ptr<const Slot> rec;
};

inline Slot::Slot(PayloadSlot p)
    : node_(std::make_shared<const SlotNode>(
          SlotNode{SlotNode::Tag::Payload, std::move(p), nullptr, nullptr, nullptr})) {}
inline Slot::Slot(EmptySlot)
    : node_(std::make_shared<const SlotNode>(SlotNode{SlotNode::Tag::Empty, {}, nullptr, nullptr, nullptr})) {}

inline Slot Slot::mu(Code code, Slot param) {
  return Slot(std::make_shared<const SlotNode>(
      SlotNode{SlotNode::Tag::Mu, {}, std::make_shared<const Code>(std::move(code)),
               std::make_shared<const Slot>(std::move(param)), nullptr}));
}

inline Slot Slot::interp(Code code, Slot param, Slot rec) {
  return Slot(std::make_shared<const SlotNode>(
      SlotNode{SlotNode::Tag::Interp, {}, std::make_shared<const Code>(std::move(code)),
               std::make_shared<const Slot>(std::move(param)),
               std::make_shared<const Slot>(std::move(rec))}));
}

inline std::string Slot::key() const {
  switch (node_->tag) {
    case SlotNode::Tag::Payload: return "pay:" + node_->payload.sort;
    case SlotNode::Tag::Empty: return "empty";
    case SlotNode::Tag::Mu: return "mu(" + to_string(*node_->code) + "|" + node_->param->key() + ")";
    case SlotNode::Tag::Interp:
      return "interp(" + to_string(*node_->code) + "|" + node_->param->key() + "|" +
             node_->rec->key() + ")";
  }
  return "?";
}

/// The parameter (A) and recursive (R) arguments of ⟦_⟧.
struct SlotPair {
  Slot param;
  Slot rec;
};

inline bool conform(const Code& code, const SlotPair& slots, const Value& v);

/// v = <w> with w ∈ ⟦code⟧ param (μ code param).
inline bool conform_mu(const Code& code, const Slot& param, const Value& v) {
  return v.is(Kind::Roll) && conform(code, SlotPair{param, Slot::mu(code, param)}, v.child());
}

inline bool slot_accepts(const Slot& slot, const Value& v) {
  const SlotNode& n = slot.node();
  switch (n.tag) {
    case SlotNode::Tag::Payload: return n.payload.accepts(v);
    case SlotNode::Tag::Empty: return false;
    case SlotNode::Tag::Mu: return conform_mu(*n.code, *n.param, v);
    case SlotNode::Tag::Interp: return conform(*n.code, SlotPair{*n.param, *n.rec}, v);
  }
  return false;
}

/// Does `v` inhabit ⟦code⟧ A R?
inline bool conform(const Code& code, const SlotPair& slots, const Value& v) {
  switch (code.op()) {
    case Code::Op::Unit:
      return v.is(Kind::TT);
    case Code::Op::Par:
      return slot_accepts(slots.param, v);
    case Code::Op::Id:
      return slot_accepts(slots.rec, v);
    case Code::Op::Sum:
      if (v.is(Kind::In1)) return conform(code.lhs(), slots, v.child());
      if (v.is(Kind::In2)) return conform(code.rhs(), slots, v.child());
      return false;
    case Code::Op::Prod:
      return v.is(Kind::Pair) && conform(code.lhs(), slots, v.first()) &&
             conform(code.rhs(), slots, v.second());
    case Code::Op::Comp:
      // ⟦F @ G⟧ A R = μ F (⟦G⟧ A R)
      return conform_mu(code.lhs(), Slot::interp(code.rhs(), slots.param, slots.rec), v);
  }
  return false;
}

/// Bifunctor map: `f` at parameters, `g` at recursive positions. Each Roll
/// under a composition consumes one unit of fuel.
inline Value map(const Code& code, const Transformer& f, const Transformer& g, const Value& v,
                 std::size_t fuel) {
  switch (code.op()) {
    case Code::Op::Unit:
      if (!v.is(Kind::TT)) throw MalformedValue("expected tt for U, got " + to_string(v));
      return v;
    case Code::Op::Par:
      return f(v);
    case Code::Op::Id:
      return g(v);
    case Code::Op::Sum:
      if (v.is(Kind::In1)) return Value::in1(map(code.lhs(), f, g, v.child(), fuel));
      if (v.is(Kind::In2)) return Value::in2(map(code.rhs(), f, g, v.child(), fuel));
      throw MalformedValue("expected in1/in2 for " + to_string(code) + ", got " + to_string(v));
    case Code::Op::Prod:
      if (!v.is(Kind::Pair))
        throw MalformedValue("expected a pair for " + to_string(code) + ", got " + to_string(v));
      return Value::pair(map(code.lhs(), f, g, v.first(), fuel),
                         map(code.rhs(), f, g, v.second(), fuel));
    case Code::Op::Comp: {
      // map (F @ G) f g <x> = <map F (map G f g) (map (F @ G) f g) x>
      if (!v.is(Kind::Roll))
        throw MalformedValue("expected <_> for " + to_string(code) + ", got " + to_string(v));
      const std::size_t rest = spend(fuel);
      const Transformer inner = [&](const Value& x) { return map(code.rhs(), f, g, x, rest); };
      const Transformer again = [&](const Value& x) { return map(code, f, g, x, rest); };
      return Value::roll(map(code.lhs(), inner, again, v.child(), rest));
    }
  }
  throw MalformedValue("unknown code");
}

/// pmap F f <x> = <map F f (pmap F f) x>
inline Value pmap(const Code& code, const Transformer& f, const Value& v, std::size_t fuel) {
  if (!v.is(Kind::Roll))
    throw MalformedValue("expected <_> for μ " + to_string(code) + ", got " + to_string(v));
  const std::size_t rest = spend(fuel);
  const Transformer again = [&](const Value& x) { return pmap(code, f, x, rest); };
  return Value::roll(map(code, f, again, v.child(), rest));
}

// Worked examples.

/// U + P * I
inline Code list_code() { return Code::sum(Code::unit(), Code::prod(Code::par(), Code::id())); }
/// P * (ListC @ I)
inline Code rose_code() { return Code::prod(Code::par(), Code::comp(list_code(), Code::id())); }
/// P + I * I, binary trees with elements at the leaves.
inline Code tree_code() { return Code::sum(Code::par(), Code::prod(Code::id(), Code::id())); }
/// (ListC @ P) + I * I, binary trees with lists at the leaves.
inline Code tree_of_lists_code() {
  return Code::sum(Code::comp(list_code(), Code::par()), Code::prod(Code::id(), Code::id()));
}

/// <tt , <in1 tt>>
inline Value s_rose() {
  return Value::roll(Value::pair(Value::tt(), Value::roll(Value::in1(Value::tt()))));
}

/// <tt , <in2 (sRose , <in2 (sRose , <in1 tt>)>)>>
inline Value l_rose() {
  const Value nil = Value::roll(Value::in1(Value::tt()));
  const Value one = Value::roll(Value::in2(Value::pair(s_rose(), nil)));
  const Value two = Value::roll(Value::in2(Value::pair(s_rose(), one)));
  return Value::roll(Value::pair(Value::tt(), two));
}

}  // namespace dgp::polyp
