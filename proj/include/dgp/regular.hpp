#pragma once

// The Regular universe: pattern functors built from U, I, + and *, closed by
// a single fixed point.

#include <memory>
#include <string>
#include <variant>

#include "dgp/print.hpp"
#include "dgp/value.hpp"

namespace dgp::regular {

class Code {
 public:
  enum class Op : std::uint8_t { Unit, Id, Sum, Prod };

  static Code unit() { return Code(Op::Unit, nullptr, nullptr); }
  static Code id() { return Code(Op::Id, nullptr, nullptr); }
  static Code sum(Code f, Code g) { return Code(Op::Sum, std::move(f.node_), std::move(g.node_)); }
  static Code prod(Code f, Code g) { return Code(Op::Prod, std::move(f.node_), std::move(g.node_)); }

  Op op() const noexcept { return node_->op; }
  Code lhs() const { return Code(node_->lhs); }
  Code rhs() const { return Code(node_->rhs); }

  friend bool operator==(const Code& a, const Code& b) {
    if (a.node_ == b.node_) return true;
    if (a.op() != b.op()) return false;
    if (a.op() == Op::Unit || a.op() == Op::Id) return true;
    return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }

 private:
  struct Node {
    Op op;
    std::shared_ptr<const Node> lhs, rhs;
  };
  Code(Op op, std::shared_ptr<const Node> l, std::shared_ptr<const Node> r)
      : node_(std::make_shared<const Node>(Node{op, std::move(l), std::move(r)})) {}
  explicit Code(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

inline int precedence(const Code& c) {
  switch (c.op()) {
    case Code::Op::Sum: return print::kSum;
    case Code::Op::Prod: return print::kProd;
    default: return print::kAtom;
  }
}

inline std::string to_string(const Code& c) {
  switch (c.op()) {
    case Code::Op::Unit: return "U";
    case Code::Op::Id: return "I";
    case Code::Op::Sum:
    case Code::Op::Prod:
      return print::binary(c.op() == Code::Op::Sum ? "+" : "*", precedence(c), to_string(c.lhs()),
                           precedence(c.lhs()), to_string(c.rhs()), precedence(c.rhs()));
  }
  return "?";
}

/// Slot filled by μ of the given code.
struct MuSlot {
  Code code;
  friend bool operator==(const MuSlot&, const MuSlot&) = default;
};

/// What may occupy the `I` positions of a layer.
using Slot = std::variant<PayloadSlot, MuSlot, EmptySlot>;

inline bool conform_mu(const Code& code, const Value& v);

/// Does `v` inhabit ⟦code⟧ A, with A described by `slot`?
inline bool conform(const Code& code, const Slot& slot, const Value& v) {
  switch (code.op()) {
    case Code::Op::Unit:
      return v.is(Kind::TT);
    case Code::Op::Id:
      if (const auto* p = std::get_if<PayloadSlot>(&slot)) return p->accepts(v);
      if (const auto* m = std::get_if<MuSlot>(&slot)) return conform_mu(m->code, v);
      return false;
    case Code::Op::Sum:
      if (v.is(Kind::In1)) return conform(code.lhs(), slot, v.child());
      if (v.is(Kind::In2)) return conform(code.rhs(), slot, v.child());
      return false;
    case Code::Op::Prod:
      return v.is(Kind::Pair) && conform(code.lhs(), slot, v.first()) &&
             conform(code.rhs(), slot, v.second());
  }
  return false;
}

/// Does `v` inhabit μ code?
inline bool conform_mu(const Code& code, const Value& v) {
  return v.is(Kind::Roll) && conform(code, MuSlot{code}, v.child());
}

/// Applies `f` at every I position of a layer of `code`.
inline Value map(const Code& code, const Transformer& f, const Value& v) {
  switch (code.op()) {
    case Code::Op::Unit:
      if (!v.is(Kind::TT)) throw MalformedValue("expected tt for U, got " + to_string(v));
      return v;
    case Code::Op::Id:
      return f(v);
    case Code::Op::Sum:
      if (v.is(Kind::In1)) return Value::in1(map(code.lhs(), f, v.child()));
      if (v.is(Kind::In2)) return Value::in2(map(code.rhs(), f, v.child()));
      throw MalformedValue("expected in1/in2 for " + to_string(code) + ", got " + to_string(v));
    case Code::Op::Prod:
      if (!v.is(Kind::Pair))
        throw MalformedValue("expected a pair for " + to_string(code) + ", got " + to_string(v));
      return Value::pair(map(code.lhs(), f, v.first()), map(code.rhs(), f, v.second()));
  }
  throw MalformedValue("unknown code");
}

/// One-layer algebra ⟦F⟧ A → A.
using Algebra = std::function<Value(const Value&)>;

/// Algebra for NatC = U + I: in1 tt ↦ nat#0, in2 nat#n ↦ nat#(n+1).
inline Algebra to_nat() {
  return [](const Value& layer) {
    if (layer.is(Kind::In1) && layer.child().is(Kind::TT)) return Value::payload("nat", 0);
    if (layer.is(Kind::In2) && layer.child().is(Kind::Payload) &&
        layer.child().token().sort == "nat")
      return Value::payload("nat", layer.child().token().id + 1);
    throw MalformedValue("toNat expects a NatC layer over nat, got " + to_string(layer));
  };
}

/// x ↦ <x>; folding with it rebuilds the input.
inline Algebra re_roll() {
  return [](const Value& layer) { return Value::roll(layer); };
}

/// cata C f <x> = f (map C (cata C f) x). Each Roll consumes one unit of fuel.
inline Value cata(const Code& code, const Algebra& alg, const Value& v, std::size_t fuel) {
  if (!v.is(Kind::Roll)) throw MalformedValue("expected <_> for μ " + to_string(code) + ", got " + to_string(v));
  const std::size_t rest = spend(fuel);
  const Transformer recurse = [&](const Value& x) { return cata(code, alg, x, rest); };
  return alg(map(code, recurse, v.child()));
}

inline Code nat_code() { return Code::sum(Code::unit(), Code::id()); }

/// aNat = <in2 <in2 <in1 tt>>>, the numeral 2.
inline Value a_nat() {
  return Value::roll(Value::in2(Value::roll(Value::in2(Value::roll(Value::in1(Value::tt()))))));
}

}  // namespace dgp::regular
