#pragma once

// Brute-force enumerators for every universe. Each builder turns a code (plus
// its slots) into a tree grammar written directly from the interpretation
// equations, independently of the conform functions; every emitted value is
// then checked against conform, so the two definitions police each other.

#include <string>
#include <vector>

#include "dgp/embed/path.hpp"
#include "dgp/indexed.hpp"
#include "dgp/instant.hpp"
#include "dgp/multirec.hpp"
#include "dgp/oracle/grammar.hpp"
#include "dgp/polyp.hpp"
#include "dgp/regular.hpp"

namespace dgp::oracle {

struct EnumBudget {
  std::size_t max_size = 10;
  /// Upper bound on Roll/RecV nesting of emitted values.
  std::size_t max_unfold = 64;
  /// Number of tokens per payload sort: s#0 .. s#(width-1).
  std::size_t payload_width = 2;
};

class UnsoundEnumeration : public Error {
 public:
  explicit UnsoundEnumeration(const std::string& what) : Error("enumerator emitted a non-conforming value: " + what) {}
};

class Enumerator {
 public:
  explicit Enumerator(EnumBudget budget) : budget_(budget) {}

  const EnumBudget& budget() const noexcept { return budget_; }
  Grammar& grammar() noexcept { return g_; }

  std::size_t payload(const PayloadSlot& s) {
    return g_.symbol("pay:" + s.sort, [s, w = budget_.payload_width](Grammar&) {
      std::vector<Production> out;
      if (s.sort == kTopSort) out.push_back(Production::make_leaf(Value::tt()));
      else if (s.sort != kBottomSort)
        for (std::size_t i = 0; i < w; ++i) out.push_back(Production::make_leaf(Value::payload(s.sort, i)));
      return out;
    });
  }

  std::size_t nothing() {
    return g_.symbol("empty", [](Grammar&) { return std::vector<Production>{}; });
  }

  std::vector<Value> values(std::size_t sym) {
    std::vector<Value> out = g_.up_to(sym, budget_.max_size);
    std::erase_if(out, [&](const Value& v) { return unfold_depth(v) > budget_.max_unfold; });
    return out;
  }

  // -- Regular ---------------------------------------------------------------

  std::size_t regular_slot(const regular::Slot& s) {
    if (const auto* p = std::get_if<PayloadSlot>(&s)) return payload(*p);
    if (const auto* m = std::get_if<regular::MuSlot>(&s)) return regular_mu(m->code);
    return nothing();
  }

  static std::string regular_slot_key(const regular::Slot& s) {
    if (const auto* p = std::get_if<PayloadSlot>(&s)) return "pay:" + p->sort;
    if (const auto* m = std::get_if<regular::MuSlot>(&s)) return "mu:" + regular::to_string(m->code);
    return "empty";
  }

  /// ⟦code⟧ slot
  std::size_t regular_layer(const regular::Code& code, const regular::Slot& slot) {
    return g_.symbol("r:" + regular::to_string(code) + "|" + regular_slot_key(slot), [this, code, slot](Grammar&) {
      using Op = regular::Code::Op;
      switch (code.op()) {
        case Op::Unit: return std::vector{Production::make_leaf(Value::tt())};
        case Op::Id: return std::vector{Production::make_alias(regular_slot(slot))};
        case Op::Sum:
          return std::vector{Production::make_unary(Kind::In1, regular_layer(code.lhs(), slot)),
                             Production::make_unary(Kind::In2, regular_layer(code.rhs(), slot))};
        case Op::Prod:
          return std::vector{Production::make_pair(regular_layer(code.lhs(), slot), regular_layer(code.rhs(), slot))};
      }
      return std::vector<Production>{};
    });
  }

  /// μ code
  std::size_t regular_mu(const regular::Code& code) {
    return g_.symbol("r-mu:" + regular::to_string(code), [this, code](Grammar&) {
      return std::vector{Production::make_unary(Kind::Roll, regular_layer(code, regular::MuSlot{code}))};
    });
  }

  // -- PolyP -----------------------------------------------------------------

  std::size_t polyp_slot(const polyp::Slot& s) {
    const polyp::SlotNode& n = s.node();
    switch (n.tag) {
      case polyp::SlotNode::Tag::Payload: return payload(n.payload);
      case polyp::SlotNode::Tag::Empty: return nothing();
      case polyp::SlotNode::Tag::Mu: return polyp_mu(*n.code, *n.param);
      case polyp::SlotNode::Tag::Interp: return polyp_layer(*n.code, polyp::SlotPair{*n.param, *n.rec});
    }
    return nothing();
  }

  /// ⟦code⟧ A R
  std::size_t polyp_layer(const polyp::Code& code, const polyp::SlotPair& slots) {
    const std::string key = "p:" + polyp::to_string(code) + "|" + slots.param.key() + "|" + slots.rec.key();
    return g_.symbol(key, [this, code, slots](Grammar&) {
      using Op = polyp::Code::Op;
      switch (code.op()) {
        case Op::Unit: return std::vector{Production::make_leaf(Value::tt())};
        case Op::Par: return std::vector{Production::make_alias(polyp_slot(slots.param))};
        case Op::Id: return std::vector{Production::make_alias(polyp_slot(slots.rec))};
        case Op::Sum:
          return std::vector{Production::make_unary(Kind::In1, polyp_layer(code.lhs(), slots)),
                             Production::make_unary(Kind::In2, polyp_layer(code.rhs(), slots))};
        case Op::Prod:
          return std::vector{Production::make_pair(polyp_layer(code.lhs(), slots), polyp_layer(code.rhs(), slots))};
        case Op::Comp:
          return std::vector{
              Production::make_alias(polyp_mu(code.lhs(), polyp::Slot::interp(code.rhs(), slots.param, slots.rec)))};
      }
      return std::vector<Production>{};
    });
  }

  /// μ code param
  std::size_t polyp_mu(const polyp::Code& code, const polyp::Slot& param) {
    return g_.symbol("p-mu:" + polyp::to_string(code) + "|" + param.key(), [this, code, param](Grammar&) {
      return std::vector{
          Production::make_unary(Kind::Roll, polyp_layer(code, polyp::SlotPair{param, polyp::Slot::mu(code, param)}))};
    });
  }

  // -- Multirec --------------------------------------------------------------

  static std::string multirec_key(const multirec::Assignment& r) {
    std::string out;
    for (const auto& [l, s] : r) {
      out += l.to_string() + "=";
      if (const auto* p = std::get_if<PayloadSlot>(&s)) out += "pay:" + p->sort;
      else if (const auto* m = std::get_if<multirec::MuSlot>(&s)) out += "mu:" + multirec::to_string(m->code);
      else out += "empty";
      out += ";";
    }
    return out;
  }

  /// ⟦body⟧ r i, where `code` supplies the family
  std::size_t multirec_body(const multirec::Code& code, const multirec::Body& body, const multirec::Assignment& r,
                            const IndexLabel& i) {
    const std::string key = "m:" + multirec::to_string(code) + "|" + multirec::to_string(body) + "|" +
                            multirec_key(r) + "|" + i.to_string();
    return g_.symbol(key, [this, code, body, r, i](Grammar&) {
      using Op = multirec::Body::Op;
      switch (body.op()) {
        case Op::Unit: return std::vector{Production::make_leaf(Value::tt())};
        case Op::Tag:
          if (body.label() == i) return std::vector{Production::make_leaf(Value::refl())};
          return std::vector<Production>{};
        case Op::Id: {
          const multirec::Slot& s = multirec::lookup(r, body.label());
          if (const auto* p = std::get_if<PayloadSlot>(&s)) return std::vector{Production::make_alias(payload(*p))};
          if (const auto* m = std::get_if<multirec::MuSlot>(&s))
            return std::vector{Production::make_alias(multirec_mu(m->code, body.label()))};
          return std::vector<Production>{};
        }
        case Op::Sum:
          return std::vector{Production::make_unary(Kind::In1, multirec_body(code, body.lhs(), r, i)),
                             Production::make_unary(Kind::In2, multirec_body(code, body.rhs(), r, i))};
        case Op::Prod:
          return std::vector{
              Production::make_pair(multirec_body(code, body.lhs(), r, i), multirec_body(code, body.rhs(), r, i))};
      }
      return std::vector<Production>{};
    });
  }

  std::size_t multirec_layer(const multirec::Code& code, const multirec::Assignment& r, const IndexLabel& i) {
    multirec::require_index(code, i);
    return multirec_body(code, code.body, r, i);
  }

  /// μ code i
  std::size_t multirec_mu(const multirec::Code& code, const IndexLabel& i) {
    multirec::require_index(code, i);
    return g_.symbol("m-mu:" + multirec::to_string(code) + "|" + i.to_string(), [this, code, i](Grammar&) {
      return std::vector{
          Production::make_unary(Kind::Roll, multirec_body(code, code.body, multirec::mu_assignment(code), i))};
    });
  }

  // -- Indexed ---------------------------------------------------------------

  std::size_t indexed_slot(const indexed::Slot& s) {
    switch (s.tag()) {
      case indexed::Slot::Tag::Payload: return payload(s.payload());
      case indexed::Slot::Tag::Empty: return nothing();
      case indexed::Slot::Tag::Interp: return indexed_layer(s.code(), s.assignment(), s.at());
      case indexed::Slot::Tag::Mu:
        return g_.symbol("i-mu:" + s.key(), [this, s](Grammar&) {
          const indexed::SlotAssignment inner =
              indexed::split_assign(s.assignment(), indexed::mu_assignment(s.code(), s.assignment()));
          return std::vector{Production::make_unary(Kind::Roll, indexed_layer(s.code(), inner, s.at()))};
        });
    }
    return nothing();
  }

  /// ⟦code⟧ r o
  std::size_t indexed_layer(const indexed::Code& code, const indexed::SlotAssignment& r, const IndexLabel& o) {
    if (!code.out().contains(o)) throw IndexNotInSet(o.to_string());
    const std::string key = "i:" + indexed::to_string(code) + "|" + indexed::assignment_key(r) + "|" + o.to_string();
    return g_.symbol(key, [this, code, r, o](Grammar&) {
      using Op = indexed::Code::Op;
      switch (code.op()) {
        case Op::Unit: return std::vector{Production::make_leaf(Value::tt())};
        case Op::Tag:
          if (code.label() == o) return std::vector{Production::make_leaf(Value::refl())};
          return std::vector<Production>{};
        case Op::Id: return std::vector{Production::make_alias(indexed_slot(indexed::lookup(r, code.label())))};
        case Op::Sum:
          return std::vector{Production::make_unary(Kind::In1, indexed_layer(code.lhs(), r, o)),
                             Production::make_unary(Kind::In2, indexed_layer(code.rhs(), r, o))};
        case Op::Prod:
          return std::vector{Production::make_pair(indexed_layer(code.lhs(), r, o), indexed_layer(code.rhs(), r, o))};
        case Op::Comp:
          return std::vector{Production::make_alias(
              indexed_layer(code.lhs(), indexed::interp_assignment(code.rhs(), r), o))};
        case Op::Fix: return std::vector{Production::make_alias(indexed_slot(indexed::Slot::mu(code.body(), r, o)))};
      }
      return std::vector<Production>{};
    });
  }

  // -- Instant Generics ------------------------------------------------------

  /// ⟦code⟧ in env
  std::size_t instant_code(const instant::CodeEnv& env, const instant::Code& code) {
    const std::string key = "ig:" + instant::to_string(env) + "|" + instant::to_string(code);
    return g_.symbol(key, [this, env, code](Grammar&) {
      using Op = instant::Code::Op;
      switch (code.op()) {
        case Op::Unit: return std::vector{Production::make_leaf(Value::tt())};
        case Op::K: {
          const instant::KSet& s = code.kset();
          switch (s.tag) {
            case instant::KSet::Tag::Prim: return std::vector{Production::make_unary(Kind::Konst, payload({s.sort}))};
            case instant::KSet::Tag::EqWitness: {
              if (!(s.a == s.b)) return std::vector<Production>{};
              const std::size_t refl = g_.symbol("refl", [](Grammar&) {
                return std::vector{Production::make_leaf(Value::refl())};
              });
              return std::vector{Production::make_unary(Kind::Konst, refl)};
            }
            case instant::KSet::Tag::OfCode:
              return std::vector{Production::make_unary(Kind::Konst, instant_code(env, env.at(s.ref)))};
          }
          return std::vector<Production>{};
        }
        case Op::R: return std::vector{Production::make_unary(Kind::RecV, instant_code(env, env.at(code.ref())))};
        case Op::Sum:
          return std::vector{Production::make_unary(Kind::In1, instant_code(env, code.lhs())),
                             Production::make_unary(Kind::In2, instant_code(env, code.rhs()))};
        case Op::Prod:
          return std::vector{Production::make_pair(instant_code(env, code.lhs()), instant_code(env, code.rhs()))};
      }
      return std::vector<Production>{};
    });
  }

  // -- Stages ----------------------------------------------------------------

  std::size_t stage(const embed::Stage& st) {
    return std::visit(
        [&](const auto& s) -> std::size_t {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, embed::RegularStage>) return regular_mu(s.code);
          else if constexpr (std::is_same_v<T, embed::PolyPStage>) return polyp_mu(s.code, s.param);
          else if constexpr (std::is_same_v<T, embed::MultirecStage>) return multirec_mu(s.code, s.index);
          else if constexpr (std::is_same_v<T, embed::IndexedStage>) return indexed_layer(s.code, s.r, s.out);
          else return instant_code(s.env, s.code);
        },
        st);
  }

 private:
  EnumBudget budget_;
  Grammar g_;
};

namespace detail {

template <class Check>
std::vector<Value> checked(std::vector<Value> vs, Check conforms, const std::string& what) {
  for (const Value& v : vs)
    if (!conforms(v)) throw UnsoundEnumeration(what + ": " + to_string(v));
  return vs;
}

}  // namespace detail

inline std::vector<Value> enumerate_regular_mu(const regular::Code& c, const EnumBudget& b) {
  Enumerator e(b);
  return detail::checked(e.values(e.regular_mu(c)), [&](const Value& v) { return regular::conform_mu(c, v); },
                         "μ " + regular::to_string(c));
}

inline std::vector<Value> enumerate_regular_layer(const regular::Code& c, const regular::Slot& s, const EnumBudget& b) {
  Enumerator e(b);
  return detail::checked(e.values(e.regular_layer(c, s)), [&](const Value& v) { return regular::conform(c, s, v); },
                         regular::to_string(c));
}

inline std::vector<Value> enumerate_polyp_mu(const polyp::Code& c, const polyp::Slot& param, const EnumBudget& b) {
  Enumerator e(b);
  return detail::checked(e.values(e.polyp_mu(c, param)),
                         [&](const Value& v) { return polyp::conform_mu(c, param, v); }, "μ " + polyp::to_string(c));
}

inline std::vector<Value> enumerate_polyp_layer(const polyp::Code& c, const polyp::SlotPair& s, const EnumBudget& b) {
  Enumerator e(b);
  return detail::checked(e.values(e.polyp_layer(c, s)), [&](const Value& v) { return polyp::conform(c, s, v); },
                         polyp::to_string(c));
}

inline std::vector<Value> enumerate_multirec_mu(const multirec::Code& c, const IndexLabel& i, const EnumBudget& b) {
  Enumerator e(b);
  return detail::checked(e.values(e.multirec_mu(c, i)), [&](const Value& v) { return multirec::conform_mu(c, i, v); },
                         "μ " + multirec::to_string(c));
}

inline std::vector<Value> enumerate_multirec_layer(const multirec::Code& c, const multirec::Assignment& r,
                                                   const IndexLabel& i, const EnumBudget& b) {
  Enumerator e(b);
  return detail::checked(e.values(e.multirec_layer(c, r, i)),
                         [&](const Value& v) { return multirec::conform(c, r, i, v); }, multirec::to_string(c));
}

inline std::vector<Value> enumerate_indexed(const indexed::Code& c, const indexed::SlotAssignment& r,
                                            const IndexLabel& o, const EnumBudget& b) {
  Enumerator e(b);
  return detail::checked(e.values(e.indexed_layer(c, r, o)),
                         [&](const Value& v) { return indexed::conform(c, r, o, v); }, indexed::to_string(c));
}

inline std::vector<Value> enumerate_instant(const instant::CodeEnv& env, const instant::Code& c, const EnumBudget& b) {
  Enumerator e(b);
  return detail::checked(e.values(e.instant_code(env, c)),
                         [&](const Value& v) { return instant::conform(env, c, v, v.size()); }, instant::to_string(c));
}

/// All values of a stage, checked against the stage's conformance.
inline std::vector<Value> enumerate_stage(const embed::Stage& st, const EnumBudget& b) {
  Enumerator e(b);
  return detail::checked(e.values(e.stage(st)), [&](const Value& v) { return embed::stage_conforms(st, v, v.size()); },
                         embed::universe_name(embed::universe_of(st)));
}

}  // namespace dgp::oracle
