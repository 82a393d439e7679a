#pragma once

// The Instant-Generics universe. There is no fixed point: recursion goes
// through R references into a named code environment, and constants K embed
// arbitrary sets (payload sorts, index equalities, or other codes).

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dgp/print.hpp"
#include "dgp/value.hpp"

namespace dgp::instant {

/// The set embedded by a K code.
struct KSet {
  enum class Tag : std::uint8_t { Prim, EqWitness, OfCode } tag = Tag::Prim;
  std::string sort;  // Prim
  IndexLabel a, b;   // EqWitness: a ≡ b
  std::string ref;   // OfCode: ⟦env(ref)⟧

  static KSet prim(std::string sort) { return KSet{Tag::Prim, std::move(sort), {}, {}, {}}; }
  static KSet eq(IndexLabel a, IndexLabel b) { return KSet{Tag::EqWitness, {}, std::move(a), std::move(b), {}}; }
  static KSet of_code(std::string ref) { return KSet{Tag::OfCode, {}, {}, {}, std::move(ref)}; }

  friend bool operator==(const KSet&, const KSet&) = default;
};

class Code {
 public:
  enum class Op : std::uint8_t { Unit, K, R, Sum, Prod };

  static Code unit() { return Code(Op::Unit, {}, {}, nullptr, nullptr); }
  static Code k(KSet s) { return Code(Op::K, std::move(s), {}, nullptr, nullptr); }
  static Code r(std::string ref) { return Code(Op::R, {}, std::move(ref), nullptr, nullptr); }
  static Code sum(Code f, Code g) { return Code(Op::Sum, {}, {}, std::move(f.node_), std::move(g.node_)); }
  static Code prod(Code f, Code g) { return Code(Op::Prod, {}, {}, std::move(f.node_), std::move(g.node_)); }

  Op op() const noexcept { return node_->op; }
  const KSet& kset() const noexcept { return node_->kset; }
  const std::string& ref() const noexcept { return node_->ref; }
  Code lhs() const { return Code(node_->lhs); }
  Code rhs() const { return Code(node_->rhs); }

  friend bool operator==(const Code& a, const Code& b) {
    if (a.node_ == b.node_) return true;
    if (a.op() != b.op() || !(a.kset() == b.kset()) || a.ref() != b.ref()) return false;
    if (a.op() != Op::Sum && a.op() != Op::Prod) return true;
    return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }

 private:
  struct Node {
    Op op;
    KSet kset;
    std::string ref;
    std::shared_ptr<const Node> lhs, rhs;
  };
  Code(Op op, KSet s, std::string ref, std::shared_ptr<const Node> l, std::shared_ptr<const Node> r)
      : node_(std::make_shared<const Node>(Node{op, std::move(s), std::move(ref), std::move(l), std::move(r)})) {}
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

inline std::string to_string(const KSet& s) {
  switch (s.tag) {
    case KSet::Tag::Prim: return "K \"" + s.sort + "\"";
    case KSet::Tag::EqWitness: return "K!(" + s.a.to_string() + ", " + s.b.to_string() + ")";
    case KSet::Tag::OfCode: return "K@" + s.ref;
  }
  return "?";
}

inline std::string to_string(const Code& c) {
  switch (c.op()) {
    case Code::Op::Unit: return "U";
    case Code::Op::K: return to_string(c.kset());
    case Code::Op::R: return "R " + c.ref();
    default:
      return print::binary(c.op() == Code::Op::Sum ? "+" : "*", precedence(c), to_string(c.lhs()),
                           precedence(c.lhs()), to_string(c.rhs()), precedence(c.rhs()));
  }
}

/// Named code table standing in for coinductive codes; R and K@ look names up here.
class CodeEnv {
 public:
  /// Adds or replaces a definition; insertion order is kept.
  void define(const std::string& name, Code code) {
    for (auto& [n, c] : entries_) {
      if (n == name) {
        c = std::move(code);
        return;
      }
    }
    entries_.emplace_back(name, std::move(code));
  }

  bool contains(const std::string& name) const { return find(name) != nullptr; }

  const Code* find(const std::string& name) const {
    for (const auto& [n, c] : entries_)
      if (n == name) return &c;
    return nullptr;
  }

  /// Dereference, the environment's counterpart of ♭.
  const Code& at(const std::string& name) const {
    if (const Code* c = find(name)) return *c;
    throw MalformedValue("unbound code name " + name);
  }

  const std::vector<std::pair<std::string, Code>>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }

  friend bool operator==(const CodeEnv&, const CodeEnv&) = default;

 private:
  std::vector<std::pair<std::string, Code>> entries_;
};

/// One "NAME = code" line per definition.
inline std::string to_string(const CodeEnv& env) {
  std::string out;
  for (const auto& [name, code] : env.entries()) out += name + " = " + to_string(code) + "\n";
  return out;
}

inline bool refs_resolve(const CodeEnv& env, const Code& c) {
  switch (c.op()) {
    case Code::Op::Unit: return true;
    case Code::Op::K: return c.kset().tag != KSet::Tag::OfCode || env.contains(c.kset().ref);
    case Code::Op::R: return env.contains(c.ref());
    default: return refs_resolve(env, c.lhs()) && refs_resolve(env, c.rhs());
  }
}

/// Every R and K@ reference in every entry resolves inside the environment.
inline bool env_check(const CodeEnv& env) {
  return std::all_of(env.entries().begin(), env.entries().end(),
                     [&](const auto& e) { return refs_resolve(env, e.second); });
}

/// Does `v` inhabit ⟦code⟧? Each R or K@ unfolding consumes one unit of fuel.
inline bool conform(const CodeEnv& env, const Code& code, const Value& v, std::size_t fuel) {
  switch (code.op()) {
    case Code::Op::Unit:
      return v.is(Kind::TT);
    case Code::Op::K: {
      if (!v.is(Kind::Konst)) return false;
      const Value w = v.child();
      const KSet& s = code.kset();
      switch (s.tag) {
        case KSet::Tag::Prim: return PayloadSlot{s.sort}.accepts(w);
        case KSet::Tag::EqWitness: return w.is(Kind::Refl) && s.a == s.b;
        case KSet::Tag::OfCode: return conform(env, env.at(s.ref), w, spend(fuel));
      }
      return false;
    }
    case Code::Op::R:
      if (!v.is(Kind::RecV)) return false;
      return conform(env, env.at(code.ref()), v.child(), spend(fuel));
    case Code::Op::Sum:
      if (v.is(Kind::In1)) return conform(env, code.lhs(), v.child(), fuel);
      if (v.is(Kind::In2)) return conform(env, code.rhs(), v.child(), fuel);
      return false;
    case Code::Op::Prod:
      return v.is(Kind::Pair) && conform(env, code.lhs(), v.first(), fuel) &&
             conform(env, code.rhs(), v.second(), fuel);
  }
  return false;
}

/// Arguments of crush: how to combine results of a product, how to adapt the
/// result of a recursive call, and what units and constants yield.
template <class Result>
struct CrushSpec {
  std::function<Result(const Result&, const Result&)> combine;
  std::function<Result(const Result&)> step;
  Result unit;
};

template <class Result>
Result crush(const CodeEnv& env, const Code& code, const CrushSpec<Result>& spec, const Value& v,
             std::size_t fuel) {
  switch (code.op()) {
    case Code::Op::Unit:
      if (!v.is(Kind::TT)) throw MalformedValue("expected tt for U, got " + to_string(v));
      return spec.unit;
    case Code::Op::K:
      if (!v.is(Kind::Konst)) throw MalformedValue("expected k _ for " + to_string(code) + ", got " + to_string(v));
      return spec.unit;
    case Code::Op::R:
      if (!v.is(Kind::RecV)) throw MalformedValue("expected rec _ for " + to_string(code) + ", got " + to_string(v));
      return spec.step(crush(env, env.at(code.ref()), spec, v.child(), spend(fuel)));
    case Code::Op::Sum:
      if (v.is(Kind::In1)) return crush(env, code.lhs(), spec, v.child(), fuel);
      if (v.is(Kind::In2)) return crush(env, code.rhs(), spec, v.child(), fuel);
      throw MalformedValue("expected in1/in2 for " + to_string(code) + ", got " + to_string(v));
    case Code::Op::Prod:
      if (!v.is(Kind::Pair)) throw MalformedValue("expected a pair for " + to_string(code) + ", got " + to_string(v));
      return spec.combine(crush(env, code.lhs(), spec, v.first(), fuel),
                          crush(env, code.rhs(), spec, v.second(), fuel));
  }
  throw MalformedValue("unknown code");
}

inline std::uint64_t nat_of(const Value& v) {
  if (!v.is(Kind::Payload) || v.token().sort != "nat") throw MalformedValue("expected a nat token, got " + to_string(v));
  return v.token().id;
}

inline Value nat(std::uint64_t n) { return Value::payload("nat", n); }

/// (_+_, suc, 0) over nat tokens.
inline CrushSpec<Value> size_spec() {
  return {[](const Value& a, const Value& b) { return nat(nat_of(a) + nat_of(b)); },
          [](const Value& a) { return nat(nat_of(a) + 1); }, nat(0)};
}

/// size C = crush C _+_ suc 0
inline std::uint64_t size(const CodeEnv& env, const Code& code, const Value& v, std::size_t fuel) {
  return nat_of(crush(env, code, size_spec(), v, fuel));
}

// Worked example.

inline const std::string kListTopName = "List⊤";

/// List⊤ = U + K "⊤" * R List⊤
inline CodeEnv list_top_env() {
  CodeEnv env;
  env.define(kListTopName, Code::sum(Code::unit(), Code::prod(Code::k(KSet::prim(kTopSort)), Code::r(kListTopName))));
  return env;
}

/// A list of `n` units: in2 (k tt , rec (...)) ending in in1 tt.
inline Value top_list(std::size_t n) {
  Value v = Value::in1(Value::tt());
  for (std::size_t i = 0; i < n; ++i) v = Value::in2(Value::pair(Value::konst(Value::tt()), Value::rec(v)));
  return v;
}

/// aList = in2 (k tt , rec (in2 (k tt , rec (in1 tt))))
inline Value a_list() { return top_list(2); }

}  // namespace dgp::instant
