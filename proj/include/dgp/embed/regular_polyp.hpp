#pragma once

// Regular → PolyP. Codes lift structurally; the PolyP parameter is set to ⊥,
// so a lifted code never has a parameter position and values keep their shape.

#include "dgp/polyp.hpp"
#include "dgp/regular.hpp"

namespace dgp::embed {

enum class Direction : std::uint8_t { Forward, Backward };

inline const char* direction_name(Direction d) { return d == Direction::Forward ? "fwd" : "bwd"; }

/// Transformer for an uninhabited parameter: reaching it means the value is malformed.
inline Transformer absurd(const std::string& where) {
  return [where](const Value& v) -> Value {
    throw MalformedValue("value " + to_string(v) + " occupies an empty " + where + " position");
  };
}

inline polyp::Code lift_r_to_p(const regular::Code& c) {
  switch (c.op()) {
    case regular::Code::Op::Unit: return polyp::Code::unit();
    case regular::Code::Op::Id: return polyp::Code::id();
    case regular::Code::Op::Sum: return polyp::Code::sum(lift_r_to_p(c.lhs()), lift_r_to_p(c.rhs()));
    case regular::Code::Op::Prod: return polyp::Code::prod(lift_r_to_p(c.lhs()), lift_r_to_p(c.rhs()));
  }
  throw MalformedValue("unknown code");
}

/// The parameter slot of a lifted regular code.
inline PayloadSlot bottom_param() { return PayloadSlot{kBottomSort}; }

/// from_r : ⟦C⟧r R → ⟦↑C⟧p ⊥ R, one layer, recursive positions untouched.
inline Value from_r_p(const regular::Code& c, const Value& x) { return regular::map(c, identity(), x); }

/// to_r : ⟦↑C⟧p ⊥ R → ⟦C⟧r R.
inline Value to_r_p(const regular::Code& c, const Value& y) {
  return polyp::map(lift_r_to_p(c), absurd("parameter"), identity(), y, 0);
}

/// fromμ_r C <x> = <from_r C (map_r C (fromμ_r C) x)>
inline Value from_mu_r_p(const regular::Code& c, const Value& v, std::size_t fuel) {
  if (!v.is(Kind::Roll)) throw MalformedValue("expected <_> for μ " + to_string(c) + ", got " + to_string(v));
  const std::size_t rest = spend(fuel);
  return Value::roll(from_r_p(c, regular::map(c, [&](const Value& x) { return from_mu_r_p(c, x, rest); }, v.child())));
}

/// toμ_r C <y> = <to_r C (map_p (↑C) ⊥ (toμ_r C) y)>
inline Value to_mu_r_p(const regular::Code& c, const Value& w, std::size_t fuel) {
  if (!w.is(Kind::Roll)) throw MalformedValue("expected <_> for μ " + to_string(lift_r_to_p(c)) + ", got " + to_string(w));
  const std::size_t rest = spend(fuel);
  const Transformer again = [&](const Value& y) { return to_mu_r_p(c, y, rest); };
  return Value::roll(to_r_p(c, polyp::map(lift_r_to_p(c), absurd("parameter"), again, w.child(), rest)));
}

}  // namespace dgp::embed
