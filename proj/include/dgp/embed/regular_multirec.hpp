#pragma once

// Regular → Multirec: a regular code is a family with a single member ⋆.
// No tags are introduced, so the value tree is carried over unchanged.

#include "dgp/embed/regular_polyp.hpp"
#include "dgp/multirec.hpp"
#include "dgp/regular.hpp"

namespace dgp::embed {

inline multirec::Body lift_r_to_m_body(const regular::Code& c) {
  switch (c.op()) {
    case regular::Code::Op::Unit: return multirec::Body::unit();
    case regular::Code::Op::Id: return multirec::Body::id(star());
    case regular::Code::Op::Sum: return multirec::Body::sum(lift_r_to_m_body(c.lhs()), lift_r_to_m_body(c.rhs()));
    case regular::Code::Op::Prod: return multirec::Body::prod(lift_r_to_m_body(c.lhs()), lift_r_to_m_body(c.rhs()));
  }
  throw MalformedValue("unknown code");
}

inline multirec::Code lift_r_to_m(const regular::Code& c) { return {unit_index_set(), lift_r_to_m_body(c)}; }

/// fromμ C <x> = <map_r C (fromμ C) x>
inline Value from_mu_r_m(const regular::Code& c, const Value& v, std::size_t fuel) {
  if (!v.is(Kind::Roll)) throw MalformedValue("expected <_> for μ " + to_string(c) + ", got " + to_string(v));
  const std::size_t rest = spend(fuel);
  return Value::roll(regular::map(c, [&](const Value& x) { return from_mu_r_m(c, x, rest); }, v.child()));
}

/// toμ C <y> = <map_m (↑C) (λ _ → toμ C) ⋆ y>
inline Value to_mu_r_m(const regular::Code& c, const Value& w, std::size_t fuel) {
  if (!w.is(Kind::Roll)) throw MalformedValue("expected <_> at index ⋆, got " + to_string(w));
  const std::size_t rest = spend(fuel);
  const IxTransform again = [&](const IndexLabel&, const Value& y) { return to_mu_r_m(c, y, rest); };
  return Value::roll(multirec::map(lift_r_to_m(c), again, star(), w.child()));
}

}  // namespace dgp::embed
