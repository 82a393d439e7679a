#pragma once

// The Multirec universe: codes indexed by a finite family of types, with
// recursive positions I@j naming a family member and tags !j constraining
// the interpretation to one member.

#include <map>
#include <memory>
#include <string>
#include <variant>

#include "dgp/print.hpp"
#include "dgp/value.hpp"

namespace dgp::multirec {

/// Code body over an (external) index set.
class Body {
 public:
  enum class Op : std::uint8_t { Unit, Id, Tag, Sum, Prod };

  static Body unit() { return Body(Op::Unit, {}, nullptr, nullptr); }
  static Body id(IndexLabel j) { return Body(Op::Id, std::move(j), nullptr, nullptr); }
  static Body tag(IndexLabel j) { return Body(Op::Tag, std::move(j), nullptr, nullptr); }
  static Body sum(Body f, Body g) { return Body(Op::Sum, {}, std::move(f.node_), std::move(g.node_)); }
  static Body prod(Body f, Body g) { return Body(Op::Prod, {}, std::move(f.node_), std::move(g.node_)); }

  Op op() const noexcept { return node_->op; }
  const IndexLabel& label() const noexcept { return node_->label; }
  Body lhs() const { return Body(node_->lhs); }
  Body rhs() const { return Body(node_->rhs); }

  friend bool operator==(const Body& a, const Body& b) {
    if (a.node_ == b.node_) return true;
    if (a.op() != b.op() || a.label() != b.label()) return false;
    if (a.op() != Op::Sum && a.op() != Op::Prod) return true;
    return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }

 private:
  struct Node {
    Op op;
    IndexLabel label;
    std::shared_ptr<const Node> lhs, rhs;
  };
  Body(Op op, IndexLabel j, std::shared_ptr<const Node> l, std::shared_ptr<const Node> r)
      : node_(std::make_shared<const Node>(Node{op, std::move(j), std::move(l), std::move(r)})) {}
  explicit Body(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

struct Code {
  IndexSet indices;
  Body body;

  friend bool operator==(const Code&, const Code&) = default;
};

inline int precedence(const Body& b) {
  switch (b.op()) {
    case Body::Op::Sum: return print::kSum;
    case Body::Op::Prod: return print::kProd;
    default: return print::kAtom;
  }
}

inline std::string to_string(const Body& b) {
  switch (b.op()) {
    case Body::Op::Unit: return "U";
    case Body::Op::Id: return "I@" + b.label().to_string();
    case Body::Op::Tag: return "!" + b.label().to_string();
    default:
      return print::binary(b.op() == Body::Op::Sum ? "+" : "*", precedence(b), to_string(b.lhs()),
                           precedence(b.lhs()), to_string(b.rhs()), precedence(b.rhs()));
  }
}

/// "indices: ..." header line followed by the body.
inline std::string to_string(const Code& c) {
  std::string header = "indices:";
  if (!c.indices.empty()) header += " " + c.indices.to_string();
  return header + "\n" + to_string(c.body);
}

/// Every Id/Tag label is a member of the index set.
inline bool wellformed(const IndexSet& indices, const Body& b) {
  switch (b.op()) {
    case Body::Op::Unit: return true;
    case Body::Op::Id:
    case Body::Op::Tag: return indices.contains(b.label());
    default: return wellformed(indices, b.lhs()) && wellformed(indices, b.rhs());
  }
}
inline bool wellformed(const Code& c) { return wellformed(c.indices, c.body); }

struct MuSlot {
  Code code;
  friend bool operator==(const MuSlot&, const MuSlot&) = default;
};

using Slot = std::variant<PayloadSlot, MuSlot, EmptySlot>;

/// Value-level `r : I → Set`, total on the code's index set.
using Assignment = std::map<IndexLabel, Slot>;

/// Assignment sending every index j to μ code j.
inline Assignment mu_assignment(const Code& code) {
  Assignment r;
  for (const auto& j : code.indices) r.emplace(j, MuSlot{code});
  return r;
}

/// Assignment sending every index to the same payload slot.
inline Assignment payload_assignment(const IndexSet& indices, const PayloadSlot& slot) {
  Assignment r;
  for (const auto& j : indices) r.emplace(j, slot);
  return r;
}

inline const Slot& lookup(const Assignment& r, const IndexLabel& j) {
  const auto it = r.find(j);
  if (it == r.end()) throw IndexNotInSet(j.to_string());
  return it->second;
}

inline void require_index(const Code& code, const IndexLabel& i) {
  if (!code.indices.contains(i)) throw IndexNotInSet(i.to_string());
}

inline bool conform_mu(const Code& code, const IndexLabel& i, const Value& v);

inline bool conform_body(const Code& code, const Body& b, const Assignment& r, const IndexLabel& i,
                         const Value& v) {
  switch (b.op()) {
    case Body::Op::Unit:
      return v.is(Kind::TT);
    case Body::Op::Id: {
      const Slot& s = lookup(r, b.label());
      if (const auto* p = std::get_if<PayloadSlot>(&s)) return p->accepts(v);
      if (const auto* m = std::get_if<MuSlot>(&s)) return conform_mu(m->code, b.label(), v);
      return false;
    }
    case Body::Op::Tag:
      // ⟦!j⟧ r i = i ≡ j
      return v.is(Kind::Refl) && i == b.label();
    case Body::Op::Sum:
      if (v.is(Kind::In1)) return conform_body(code, b.lhs(), r, i, v.child());
      if (v.is(Kind::In2)) return conform_body(code, b.rhs(), r, i, v.child());
      return false;
    case Body::Op::Prod:
      return v.is(Kind::Pair) && conform_body(code, b.lhs(), r, i, v.first()) &&
             conform_body(code, b.rhs(), r, i, v.second());
  }
  return false;
}

/// Does `v` inhabit ⟦code⟧ r i?
inline bool conform(const Code& code, const Assignment& r, const IndexLabel& i, const Value& v) {
  require_index(code, i);
  return conform_body(code, code.body, r, i, v);
}

/// Does `v` inhabit μ code i?
inline bool conform_mu(const Code& code, const IndexLabel& i, const Value& v) {
  require_index(code, i);
  return v.is(Kind::Roll) && conform_body(code, code.body, mu_assignment(code), i, v.child());
}

inline Value map_body(const Body& b, const IxTransform& f, const IndexLabel& i, const Value& v) {
  switch (b.op()) {
    case Body::Op::Unit:
      if (!v.is(Kind::TT)) throw MalformedValue("expected tt for U, got " + to_string(v));
      return v;
    case Body::Op::Id:
      return f(b.label(), v);
    case Body::Op::Tag:
      if (!v.is(Kind::Refl)) throw MalformedValue("expected refl for " + to_string(b) + ", got " + to_string(v));
      return v;
    case Body::Op::Sum:
      if (v.is(Kind::In1)) return Value::in1(map_body(b.lhs(), f, i, v.child()));
      if (v.is(Kind::In2)) return Value::in2(map_body(b.rhs(), f, i, v.child()));
      throw MalformedValue("expected in1/in2 for " + to_string(b) + ", got " + to_string(v));
    case Body::Op::Prod:
      if (!v.is(Kind::Pair))
        throw MalformedValue("expected a pair for " + to_string(b) + ", got " + to_string(v));
      return Value::pair(map_body(b.lhs(), f, i, v.first()), map_body(b.rhs(), f, i, v.second()));
  }
  throw MalformedValue("unknown code");
}

/// Index-preserving map over one layer at index `i`.
inline Value map(const Code& code, const IxTransform& f, const IndexLabel& i, const Value& v) {
  require_index(code, i);
  return map_body(code.body, f, i, v);
}

// Worked example: the Zig/Zag family over ⊤ ⊎ ⊤.

inline IndexLabel zig_index() { return IndexLabel::left(star()); }
inline IndexLabel zag_index() { return IndexLabel::right(star()); }

/// I@inr.⋆ + U
inline Body zig_body() { return Body::sum(Body::id(zag_index()), Body::unit()); }
/// I@inl.⋆
inline Body zag_body() { return Body::id(zig_index()); }

/// !inl.⋆ * ZigC + !inr.⋆ * ZagC
inline Code zigzag_code() {
  return Code{disjoint_union(unit_index_set(), unit_index_set()),
              Body::sum(Body::prod(Body::tag(zig_index()), zig_body()),
                        Body::prod(Body::tag(zag_index()), zag_body()))};
}

/// zig (zag end): <in1 (refl , in1 <in2 (refl , <in1 (refl , in2 tt)>)>)>
inline Value zigzag_end() {
  const Value end = Value::roll(Value::in1(Value::pair(Value::refl(), Value::in2(Value::tt()))));
  const Value zag = Value::roll(Value::in2(Value::pair(Value::refl(), end)));
  return Value::roll(Value::in1(Value::pair(Value::refl(), Value::in1(zag))));
}

}  // namespace dgp::multirec
