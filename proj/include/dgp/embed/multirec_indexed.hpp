#pragma once

// Multirec → Indexed. A family over I becomes a body from ∅ ⊎ I to I, closed
// with Fix; recursive positions move to the right of the sum, tags stay put.

#include "dgp/embed/regular_polyp.hpp"
#include "dgp/indexed.hpp"
#include "dgp/multirec.hpp"

namespace dgp::embed {

inline indexed::Code lift_m_to_i_body(const IndexSet& family, const multirec::Body& b) {
  const IndexSet in = disjoint_union({}, family);
  using Op = multirec::Body::Op;
  switch (b.op()) {
    case Op::Unit: return indexed::Code::unit(in, family);
    case Op::Id: return indexed::Code::id(in, family, IndexLabel::right(b.label()));
    case Op::Tag: return indexed::Code::tag(in, family, b.label());
    case Op::Sum: return indexed::Code::sum(lift_m_to_i_body(family, b.lhs()), lift_m_to_i_body(family, b.rhs()));
    case Op::Prod: return indexed::Code::prod(lift_m_to_i_body(family, b.lhs()), lift_m_to_i_body(family, b.rhs()));
  }
  throw MalformedValue("unknown code");
}

/// The open body; meant to be closed with Fix.
inline indexed::Code lift_m_to_i(const multirec::Code& c) { return lift_m_to_i_body(c.indices, c.body); }

/// Fix (↑C), a closed code from ∅ to the family.
inline indexed::Code lift_m_to_i_mu(const multirec::Code& c) { return indexed::Code::fix(lift_m_to_i(c)); }

/// fromμ C i <x> = <map_m C (fromμ C) i x>
inline Value from_mu_m_i(const multirec::Code& c, const IndexLabel& i, const Value& v, std::size_t fuel) {
  multirec::require_index(c, i);
  if (!v.is(Kind::Roll)) throw MalformedValue("expected <_> at index " + i.to_string() + ", got " + to_string(v));
  const std::size_t rest = spend(fuel);
  const IxTransform again = [&](const IndexLabel& j, const Value& x) { return from_mu_m_i(c, j, x, rest); };
  return Value::roll(multirec::map(c, again, i, v.child()));
}

/// toμ C i <y> = <map_i (↑C) (id ∥ toμ C) i y>
inline Value to_mu_m_i(const multirec::Code& c, const IndexLabel& i, const Value& w, std::size_t fuel) {
  multirec::require_index(c, i);
  if (!w.is(Kind::Roll)) throw MalformedValue("expected <_> at index " + i.to_string() + ", got " + to_string(w));
  const std::size_t rest = spend(fuel);
  const IxTransform t = indexed::split_transform(
      identity_ix(), [&](const IndexLabel& j, const Value& y) { return to_mu_m_i(c, j, y, rest); });
  return Value::roll(indexed::map(lift_m_to_i(c), t, i, w.child(), rest));
}

}  // namespace dgp::embed
