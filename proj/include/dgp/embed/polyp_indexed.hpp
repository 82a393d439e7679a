#pragma once

// PolyP → Indexed. A PolyP code becomes an indexed code from ⊤ ⊎ ⊤ (parameter
// on the left, recursion on the right) to ⊤; composition F @ G becomes
// (Fix ↑F) @ ↑G, so μ F (⟦G⟧ A R) turns into an internal fixed point.

#include "dgp/embed/regular_polyp.hpp"
#include "dgp/indexed.hpp"
#include "dgp/polyp.hpp"

namespace dgp::embed {

inline IndexLabel param_index() { return IndexLabel::left(star()); }
inline IndexLabel rec_index() { return IndexLabel::right(star()); }
inline IndexSet polyp_in() { return disjoint_union(unit_index_set(), unit_index_set()); }

/// ↑ : Code_p → Code_i (⊤ ⊎ ⊤) ⊤
inline indexed::Code lift_p_to_i(const polyp::Code& c) {
  using Op = polyp::Code::Op;
  switch (c.op()) {
    case Op::Unit: return indexed::Code::unit(polyp_in(), unit_index_set());
    case Op::Par: return indexed::Code::id(polyp_in(), unit_index_set(), param_index());
    case Op::Id: return indexed::Code::id(polyp_in(), unit_index_set(), rec_index());
    case Op::Sum: return indexed::Code::sum(lift_p_to_i(c.lhs()), lift_p_to_i(c.rhs()));
    case Op::Prod: return indexed::Code::prod(lift_p_to_i(c.lhs()), lift_p_to_i(c.rhs()));
    case Op::Comp:
      // ↑ (F @ G) = (Fix ↑F) @ ↑G
      return indexed::Code::comp(indexed::Code::fix(lift_p_to_i(c.lhs())), lift_p_to_i(c.rhs()));
  }
  throw MalformedValue("unknown code");
}

/// The closed indexed code standing for μ C: Fix (↑C), from ⊤ to ⊤.
inline indexed::Code lift_p_to_i_mu(const polyp::Code& c) { return indexed::Code::fix(lift_p_to_i(c)); }

/// Converts an indexed-universe parameter slot for the lifted μ code.
inline indexed::SlotAssignment polyp_mu_assignment(const PayloadSlot& param) {
  return indexed::payload_assignment(unit_index_set(), param);
}

/// from_p : ⟦C⟧p A R → ⟦↑C⟧i (A ∣ R) ⋆, one layer. Only compositions change
/// anything, and then only below their roll.
inline Value from_p_i(const polyp::Code& c, const Value& x, std::size_t fuel) {
  using Op = polyp::Code::Op;
  switch (c.op()) {
    case Op::Unit:
      if (!x.is(Kind::TT)) throw MalformedValue("expected tt for U, got " + to_string(x));
      return x;
    case Op::Par:
    case Op::Id:
      return x;
    case Op::Sum:
      if (x.is(Kind::In1)) return Value::in1(from_p_i(c.lhs(), x.child(), fuel));
      if (x.is(Kind::In2)) return Value::in2(from_p_i(c.rhs(), x.child(), fuel));
      throw MalformedValue("expected in1/in2 for " + to_string(c) + ", got " + to_string(x));
    case Op::Prod:
      if (!x.is(Kind::Pair)) throw MalformedValue("expected a pair for " + to_string(c) + ", got " + to_string(x));
      return Value::pair(from_p_i(c.lhs(), x.first(), fuel), from_p_i(c.rhs(), x.second(), fuel));
    case Op::Comp: {
      // from (F @ G) <x> = <map_i (↑F) ((λ_ → from G) ∥ (λ_ → from (F @ G))) ⋆ (from F x)>
      if (!x.is(Kind::Roll)) throw MalformedValue("expected <_> for " + to_string(c) + ", got " + to_string(x));
      const std::size_t rest = spend(fuel);
      const polyp::Code g = c.rhs();
      const IxTransform t = indexed::split_transform(
          [&](const IndexLabel&, const Value& y) { return from_p_i(g, y, rest); },
          [&](const IndexLabel&, const Value& y) { return from_p_i(c, y, rest); });
      return Value::roll(indexed::map(lift_p_to_i(c.lhs()), t, star(), from_p_i(c.lhs(), x.child(), rest), rest));
    }
  }
  throw MalformedValue("unknown code");
}

/// to_p, the mirror image of from_p.
inline Value to_p_i(const polyp::Code& c, const Value& y, std::size_t fuel) {
  using Op = polyp::Code::Op;
  switch (c.op()) {
    case Op::Unit:
      if (!y.is(Kind::TT)) throw MalformedValue("expected tt for U, got " + to_string(y));
      return y;
    case Op::Par:
    case Op::Id:
      return y;
    case Op::Sum:
      if (y.is(Kind::In1)) return Value::in1(to_p_i(c.lhs(), y.child(), fuel));
      if (y.is(Kind::In2)) return Value::in2(to_p_i(c.rhs(), y.child(), fuel));
      throw MalformedValue("expected in1/in2 for " + to_string(c) + ", got " + to_string(y));
    case Op::Prod:
      if (!y.is(Kind::Pair)) throw MalformedValue("expected a pair for " + to_string(c) + ", got " + to_string(y));
      return Value::pair(to_p_i(c.lhs(), y.first(), fuel), to_p_i(c.rhs(), y.second(), fuel));
    case Op::Comp: {
      // to (F @ G) <y> = <to F (map_i (↑F) ((λ_ → to G) ∥ (λ_ → to (F @ G))) ⋆ y)>
      if (!y.is(Kind::Roll)) throw MalformedValue("expected <_> for " + to_string(c) + ", got " + to_string(y));
      const std::size_t rest = spend(fuel);
      const polyp::Code g = c.rhs();
      const IxTransform t = indexed::split_transform(
          [&](const IndexLabel&, const Value& z) { return to_p_i(g, z, rest); },
          [&](const IndexLabel&, const Value& z) { return to_p_i(c, z, rest); });
      return Value::roll(to_p_i(c.lhs(), indexed::map(lift_p_to_i(c.lhs()), t, star(), y.child(), rest), rest));
    }
  }
  throw MalformedValue("unknown code");
}

/// fromμ_p C <x> = <map_i (↑C) (id ∥ fromμ_p C) ⋆ (from_p C x)>
inline Value from_mu_p_i(const polyp::Code& c, const Value& v, std::size_t fuel) {
  if (!v.is(Kind::Roll)) throw MalformedValue("expected <_> for μ " + to_string(c) + ", got " + to_string(v));
  const std::size_t rest = spend(fuel);
  const IxTransform t = indexed::split_transform(
      identity_ix(), [&](const IndexLabel&, const Value& y) { return from_mu_p_i(c, y, rest); });
  return Value::roll(indexed::map(lift_p_to_i(c), t, star(), from_p_i(c, v.child(), rest), rest));
}

/// toμ_p C <y> = <to_p C (map_i (↑C) (id ∥ toμ_p C) ⋆ y)>
inline Value to_mu_p_i(const polyp::Code& c, const Value& w, std::size_t fuel) {
  if (!w.is(Kind::Roll)) throw MalformedValue("expected <_> at index ⋆, got " + to_string(w));
  const std::size_t rest = spend(fuel);
  const IxTransform t = indexed::split_transform(
      identity_ix(), [&](const IndexLabel&, const Value& y) { return to_mu_p_i(c, y, rest); });
  return Value::roll(to_p_i(c, indexed::map(lift_p_to_i(c), t, star(), w.child(), rest), rest));
}

}  // namespace dgp::embed
