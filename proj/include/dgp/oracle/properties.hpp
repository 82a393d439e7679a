#pragma once

// Executable versions of the functor laws, the ∥ lemmas, and the embedding
// isomorphisms, each run exhaustively over enumerated values. Failures are
// recorded in enumeration order, so the first one is a minimal witness.

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dgp/oracle/corpus.hpp"
#include "dgp/oracle/enumerate.hpp"

namespace dgp::oracle {

struct Failure {
  std::string entry;
  Value input;
  std::string direction;
  std::string description;
};

struct ConversionReport {
  std::string property;
  std::size_t checked = 0;
  std::vector<Failure> failures;

  bool ok() const noexcept { return failures.empty(); }
};

/// "name: N checked, F failures", plus the first witness if any.
inline std::string to_string(const ConversionReport& r) {
  std::string out = r.property + ": " + std::to_string(r.checked) + " checked, " +
                    std::to_string(r.failures.size()) + " failures";
  if (!r.failures.empty()) {
    const Failure& f = r.failures.front();
    out += "\n  first: " + f.entry + " " + f.direction + " " + dgp::to_string(f.input) + ": " + f.description;
  }
  return out;
}

namespace detail {

/// Runs one check; an Error thrown by the check counts as a failure.
inline void check(ConversionReport& rep, const std::string& entry, const Value& input, const std::string& dir,
                  const std::function<std::optional<std::string>()>& body) {
  ++rep.checked;
  try {
    if (auto msg = body()) rep.failures.push_back({entry, input, dir, *msg});
  } catch (const Error& e) {
    rep.failures.push_back({entry, input, dir, e.what()});
  }
}

inline std::optional<std::string> expect_equal(const Value& got, const Value& want) {
  if (got == want) return std::nullopt;
  return "got " + to_string(got) + ", expected " + to_string(want);
}

inline void tokens_of(const Value& v, std::set<PayloadToken>& out) {
  switch (v.kind()) {
    case Kind::Payload: out.insert(v.token()); break;
    case Kind::Pair:
      tokens_of(v.first(), out);
      tokens_of(v.second(), out);
      break;
    case Kind::TT:
    case Kind::Refl: break;
    default: tokens_of(v.child(), out);
  }
}

/// Agrees with `f` on every token of `v`; anything else is a failure.
inline Transformer restricted(const Transformer& f, const Value& v) {
  auto tokens = std::make_shared<std::set<PayloadToken>>();
  tokens_of(v, *tokens);
  return [f, tokens](const Value& x) -> Value {
    if (x.is(Kind::Payload) && tokens->contains(x.token())) return f(x);
    throw MalformedValue("restricted transformer applied outside its domain: " + to_string(x));
  };
}

/// succ written independently of successor(); pointwise equal to it.
inline Transformer successor_again() {
  return [](const Value& x) {
    if (!x.is(Kind::Payload)) throw MalformedValue("successor applied to a non-payload value");
    return Value::payload(PayloadToken{x.token().sort, x.token().id + 1});
  };
}

inline const PayloadSlot kA{"a"};
inline const PayloadSlot kB{"b"};

/// {inl.⋆ ↦ a, inr.⋆ ↦ b}, the slots of an open lifted PolyP layer.
inline indexed::SlotAssignment open_polyp_assignment() {
  return {{embed::param_index(), kA}, {embed::rec_index(), kB}};
}

/// Number of RecV nodes not under a K constant: what size counts.
inline std::uint64_t rec_count(const Value& v) {
  switch (v.kind()) {
    case Kind::Konst:
    case Kind::TT:
    case Kind::Refl:
    case Kind::Payload: return 0;
    case Kind::Pair: return rec_count(v.first()) + rec_count(v.second());
    case Kind::RecV: return 1 + rec_count(v.child());
    default: return rec_count(v.child());
  }
}

// -- Functor laws -----------------------------------------------------------

inline ConversionReport regular_laws(const std::string& name, const Corpus& c, const EnumBudget& b) {
  ConversionReport rep{name, 0, {}};
  const Transformer s = successor();
  for (const auto& e : c.regular) {
    for (const Value& v : enumerate_regular_layer(e.code, kA, b)) {
      check(rep, e.name, v, "layer", [&]() -> std::optional<std::string> {
        if (name == "map-id-r") return expect_equal(regular::map(e.code, identity(), v), v);
        if (name == "map-comp-r")
          return expect_equal(regular::map(e.code, s, regular::map(e.code, s, v)), regular::map(e.code, compose(s, s), v));
        return expect_equal(regular::map(e.code, restricted(s, v), v), regular::map(e.code, s, v));
      });
    }
  }
  return rep;
}

inline ConversionReport polyp_laws(const std::string& name, const Corpus& c, const EnumBudget& b) {
  ConversionReport rep{name, 0, {}};
  const Transformer s = successor();
  const Transformer ss = compose(s, s);
  for (const auto& e : c.polyp) {
    if (name == "map-id-p" || name == "map-comp-p") {
      for (const Value& v : enumerate_polyp_layer(e.code, polyp::SlotPair{kA, kB}, b)) {
        const std::size_t fuel = v.size();
        check(rep, e.name, v, "layer", [&]() -> std::optional<std::string> {
          if (name == "map-id-p") return expect_equal(polyp::map(e.code, identity(), identity(), v, fuel), v);
          // map f g ∘ map h k = map (f ∘ h) (g ∘ k), with f = h = succ, g = succ, k = id
          const Value twice = polyp::map(e.code, s, s, polyp::map(e.code, s, identity(), v, fuel), fuel);
          return expect_equal(twice, polyp::map(e.code, ss, s, v, fuel));
        });
      }
    } else {
      for (const Value& v : enumerate_polyp_mu(e.code, e.param, b)) {
        const std::size_t fuel = v.size();
        check(rep, e.name, v, "mu", [&]() -> std::optional<std::string> {
          if (name == "pmap-id") return expect_equal(polyp::pmap(e.code, identity(), v, fuel), v);
          return expect_equal(polyp::pmap(e.code, s, polyp::pmap(e.code, s, v, fuel), fuel),
                              polyp::pmap(e.code, ss, v, fuel));
        });
      }
    }
  }
  return rep;
}

inline ConversionReport multirec_laws(const std::string& name, const Corpus& c, const EnumBudget& b) {
  ConversionReport rep{name, 0, {}};
  for (const auto& e : c.multirec) {
    const multirec::Assignment r = multirec::payload_assignment(e.code.indices, kA);
    const IndexLabel first = *e.code.indices.begin();
    for (const auto& i : e.code.indices) {
      for (const Value& v : enumerate_multirec_layer(e.code, r, i, b)) {
        check(rep, e.name + "@" + i.to_string(), v, "layer", [&]() -> std::optional<std::string> {
          if (name == "map-id-m") return expect_equal(multirec::map(e.code, identity_ix(), i, v), v);
          const IxTransform f = uniform(successor());
          const IxTransform g = only_at(first, successor());
          return expect_equal(multirec::map(e.code, f, i, multirec::map(e.code, g, i, v)),
                              multirec::map(e.code, compose_ix(f, g), i, v));
        });
      }
    }
  }
  return rep;
}

/// Indexed stages the map_i laws run over: the corpus entries, plus every
/// open lifted PolyP layer with payload inputs.
inline std::vector<std::pair<std::string, embed::IndexedStage>> indexed_law_stages(const Corpus& c) {
  std::vector<std::pair<std::string, embed::IndexedStage>> out;
  for (const auto& [n, st] : c.stages(embed::Universe::Indexed)) out.emplace_back(n, std::get<embed::IndexedStage>(st));
  for (const auto& e : c.polyp)
    out.emplace_back("open " + e.name, embed::IndexedStage{embed::lift_p_to_i(e.code), open_polyp_assignment(), star()});
  return out;
}

inline ConversionReport indexed_laws(const std::string& name, const Corpus& c, const EnumBudget& b) {
  ConversionReport rep{name, 0, {}};
  for (const auto& [n, st] : indexed_law_stages(c)) {
    for (const Value& v : enumerate_indexed(st.code, st.r, st.out, b)) {
      const std::size_t fuel = v.size();
      check(rep, n, v, "layer", [&]() -> std::optional<std::string> {
        const auto m = [&](const IxTransform& f, const Value& x) { return indexed::map(st.code, f, st.out, x, fuel); };
        if (name == "map-id-i") return expect_equal(m(identity_ix(), v), v);
        const IxTransform f = uniform(successor());
        if (name == "map-comp-i") {
          const IxTransform g = st.code.in().empty() ? identity_ix() : only_at(*st.code.in().begin(), successor());
          return expect_equal(m(f, m(g, v)), m(compose_ix(f, g), v));
        }
        const IxTransform f2 = [&](const IndexLabel&, const Value& x) { return restricted(successor(), v)(x); };
        return expect_equal(m(f2, v), m(f, v));
      });
    }
  }
  return rep;
}

// -- ∥ lemmas -----------------------------------------------------------------

inline ConversionReport par_lemmas(const std::string& name, const Corpus& c, const EnumBudget& b) {
  ConversionReport rep{name, 0, {}};
  const Transformer s = successor();
  const auto u = [](Transformer f) { return uniform(std::move(f)); };
  for (const auto& e : c.polyp) {
    const indexed::Code code = embed::lift_p_to_i(e.code);
    const indexed::SlotAssignment r = open_polyp_assignment();
    for (const Value& v : enumerate_indexed(code, r, star(), b)) {
      const std::size_t fuel = v.size();
      const auto m = [&](const IxTransform& f, const Value& x) { return indexed::map(code, f, star(), x, fuel); };
      check(rep, e.name, v, "layer", [&]() -> std::optional<std::string> {
        using indexed::split_transform;
        if (name == "par-id") return expect_equal(m(split_transform(identity_ix(), identity_ix()), v), v);
        if (name == "par-comp") {
          // (f ∥ g) ∘ (h ∥ k) ≅ (f ∘ h) ∥ (g ∘ k), with f = h = succ, g = succ, k = id
          const IxTransform fg = split_transform(u(s), u(s));
          const IxTransform hk = split_transform(u(s), identity_ix());
          const Value split_of_comp = m(split_transform(u(compose(s, s)), u(s)), v);
          if (auto bad = expect_equal(m(compose_ix(fg, hk), v), split_of_comp)) return bad;
          return expect_equal(m(fg, m(hk, v)), split_of_comp);
        }
        // f ≅ f', g ≅ g' ⇒ f ∥ g ≅ f' ∥ g'
        return expect_equal(m(split_transform(u(successor_again()), u(restricted(s, v))), v),
                            m(split_transform(u(s), u(s)), v));
      });
    }
  }
  return rep;
}

// -- Embeddings ---------------------------------------------------------------

inline std::optional<embed::Step> step_from_tag(const std::string& tag) {
  for (embed::Step s : embed::kAllSteps)
    if (tag == embed::step_tag(s)) return s;
  return std::nullopt;
}

inline ConversionReport iso_property(const std::string& name, const std::string& kind, embed::Step step,
                                     const Corpus& c, const EnumBudget& b) {
  ConversionReport rep{name, 0, {}};
  using embed::Direction;
  for (const auto& [n, src] : c.stages(embed::step_source(step))) {
    const embed::Stage tgt = embed::lift_stage(step, src);
    if (kind == "iso2") {
      for (const Value& w : enumerate_stage(tgt, b)) {
        check(rep, n, w, "bwd;fwd", [&]() -> std::optional<std::string> {
          const Value v = embed::convert_step(step, src, w, Direction::Backward, w.size());
          if (!embed::stage_conforms(src, v, v.size())) return "backward result " + to_string(v) + " does not conform";
          return expect_equal(embed::convert_step(step, src, v, Direction::Forward, v.size()), w);
        });
      }
      continue;
    }
    for (const Value& v : enumerate_stage(src, b)) {
      const std::size_t fuel = v.size();
      check(rep, n, v, kind == "transport" ? "fwd" : "fwd;bwd", [&]() -> std::optional<std::string> {
        const Value w = embed::convert_step(step, src, v, Direction::Forward, fuel);
        if (kind == "transport") {
          if (embed::stage_conforms(tgt, w, w.size())) return std::nullopt;
          return "forward result " + to_string(w) + " does not conform";
        }
        return expect_equal(embed::convert_step(step, src, w, Direction::Backward, w.size()), v);
      });
    }
  }
  return rep;
}

/// Layer-level Regular → PolyP: to_r ∘ from_r = id on ⟦C⟧ a, plus mapCommute.
inline ConversionReport regular_polyp_layer(const std::string& name, const Corpus& c, const EnumBudget& b) {
  ConversionReport rep{name, 0, {}};
  for (const auto& e : c.regular) {
    const polyp::Code lifted = embed::lift_r_to_p(e.code);
    if (name == "iso-r-p") {
      for (const Value& v : enumerate_regular_layer(e.code, kA, b)) {
        check(rep, e.name, v, "fwd;bwd", [&]() -> std::optional<std::string> {
          const Value w = embed::from_r_p(e.code, v);
          if (!polyp::conform(lifted, polyp::SlotPair{embed::bottom_param(), kA}, w))
            return "forward result " + to_string(w) + " does not conform";
          return expect_equal(embed::to_r_p(e.code, w), v);
        });
      }
    } else {
      // to_r (map_p (↑C) id f w) = map_r C f (to_r w)
      for (const Value& w : enumerate_polyp_layer(lifted, polyp::SlotPair{embed::bottom_param(), kA}, b)) {
        check(rep, e.name, w, "bwd", [&]() -> std::optional<std::string> {
          const Value lhs = embed::to_r_p(e.code, polyp::map(lifted, identity(), successor(), w, w.size()));
          return expect_equal(lhs, regular::map(e.code, successor(), embed::to_r_p(e.code, w)));
        });
      }
    }
  }
  return rep;
}

/// r→p→i and r→m→i both round-trip every Regular value.
inline ConversionReport path_independence(const std::string& name, const Corpus& c, const EnumBudget& b) {
  ConversionReport rep{name, 0, {}};
  using embed::Step;
  const std::vector<Step> via_p{Step::RegularToPolyP, Step::PolyPToIndexed};
  const std::vector<Step> via_m{Step::RegularToMultirec, Step::MultirecToIndexed};
  for (const auto& e : c.regular) {
    const embed::Stage src = embed::RegularStage{e.code};
    for (const Value& v : enumerate_stage(src, b)) {
      check(rep, e.name, v, "fwd;bwd", [&]() -> std::optional<std::string> {
        const std::size_t fuel = v.size();
        const Value p = embed::compose_path(via_p, src, embed::compose_path(via_p, src, v, embed::Direction::Forward, fuel),
                                            embed::Direction::Backward, fuel);
        const Value m = embed::compose_path(via_m, src, embed::compose_path(via_m, src, v, embed::Direction::Forward, fuel),
                                            embed::Direction::Backward, fuel);
        if (auto bad = expect_equal(p, v)) return "via polyp: " + *bad;
        if (auto bad = expect_equal(m, v)) return "via multirec: " + *bad;
        return std::nullopt;
      });
    }
  }
  return rep;
}

inline ConversionReport instant_checks(const std::string& name, const Corpus& c, const EnumBudget& b) {
  ConversionReport rep{name, 0, {}};
  for (const auto& e : c.instant) {
    for (const Value& v : enumerate_instant(e.env, e.code, b)) {
      check(rep, e.name, v, "-", [&]() -> std::optional<std::string> {
        if (name == "ig-fuel-monotone") {
          std::size_t n = 0;
          for (;; ++n) {
            try {
              if (instant::conform(e.env, e.code, v, n)) break;
              return "does not conform at fuel " + std::to_string(n);
            } catch (const FuelExhausted&) {
            }
          }
          for (std::size_t k = n; k <= n + 4; ++k)
            if (!instant::conform(e.env, e.code, v, k)) return "conformance lost at fuel " + std::to_string(k);
          return std::nullopt;
        }
        if (name == "ig-size") {
          const std::uint64_t got = instant::size(e.env, e.code, v, v.size());
          if (got == rec_count(v)) return std::nullopt;
          return "size " + std::to_string(got) + ", expected " + std::to_string(rec_count(v));
        }
        const instant::CrushSpec<Value> spec{
            [](const Value& x, const Value& y) { return instant::nat(std::max(instant::nat_of(x), instant::nat_of(y))); },
            [](const Value& x) { return x; }, instant::nat(0)};
        return expect_equal(instant::crush(e.env, e.code, spec, v, v.size()), instant::nat(0));
      });
    }
  }
  return rep;
}

using PropertyFn = std::function<ConversionReport(const std::string&, const Corpus&, const EnumBudget&)>;

inline const std::map<std::string, PropertyFn>& property_registry() {
  static const std::map<std::string, PropertyFn> registry = [] {
    std::map<std::string, PropertyFn> r;
    for (const char* n : {"map-id-r", "map-comp-r", "map-cong-r"}) r.emplace(n, regular_laws);
    for (const char* n : {"map-id-p", "map-comp-p", "pmap-id", "pmap-comp"}) r.emplace(n, polyp_laws);
    for (const char* n : {"map-id-m", "map-comp-m"}) r.emplace(n, multirec_laws);
    for (const char* n : {"map-id-i", "map-comp-i", "map-cong-i"}) r.emplace(n, indexed_laws);
    for (const char* n : {"par-id", "par-comp", "par-cong"}) r.emplace(n, par_lemmas);
    for (const char* n : {"iso-r-p", "mapCommute-r-p"}) r.emplace(n, regular_polyp_layer);
    for (embed::Step s : embed::kAllSteps) {
      const std::string tag = embed::step_tag(s);
      const std::string mu_iso = s == embed::Step::RegularToPolyP ? "isoMu-" : "iso-";
      r.emplace(mu_iso + tag, [s](const std::string& n, const Corpus& c, const EnumBudget& b) {
        return iso_property(n, "iso", s, c, b);
      });
      r.emplace("iso2-" + tag, [s](const std::string& n, const Corpus& c, const EnumBudget& b) {
        return iso_property(n, "iso2", s, c, b);
      });
      r.emplace("transport-" + tag, [s](const std::string& n, const Corpus& c, const EnumBudget& b) {
        return iso_property(n, "transport", s, c, b);
      });
    }
    r.emplace("path-independence", path_independence);
    for (const char* n : {"ig-fuel-monotone", "ig-size", "ig-crush-max"}) r.emplace(n, instant_checks);
    return r;
  }();
  return registry;
}

}  // namespace detail

inline std::vector<std::string> property_names() {
  std::vector<std::string> out;
  for (const auto& [n, f] : detail::property_registry()) out.push_back(n);
  return out;
}

/// Runs a named property over a corpus.
inline ConversionReport run_property(const std::string& name, const Corpus& corpus, const EnumBudget& budget) {
  const auto& reg = detail::property_registry();
  const auto it = reg.find(name);
  if (it == reg.end()) throw UnknownProperty(name);
  return it->second(name, corpus, budget);
}

/// Functor-law property names for one universe.
inline std::vector<std::string> law_properties(embed::Universe u) {
  switch (u) {
    case embed::Universe::Regular: return {"map-id-r", "map-comp-r", "map-cong-r"};
    case embed::Universe::PolyP: return {"map-id-p", "map-comp-p", "pmap-id", "pmap-comp"};
    case embed::Universe::Multirec: return {"map-id-m", "map-comp-m"};
    case embed::Universe::Indexed: return {"map-id-i", "map-comp-i", "map-cong-i", "par-id", "par-comp", "par-cong"};
    case embed::Universe::Instant: return {"ig-fuel-monotone", "ig-size", "ig-crush-max"};
  }
  return {};
}

/// Round-trip property names for one arrow.
inline std::vector<std::string> iso_properties(embed::Step s) {
  const std::string tag = embed::step_tag(s);
  std::vector<std::string> out;
  if (s == embed::Step::RegularToPolyP) out = {"iso-r-p", "isoMu-r-p", "mapCommute-r-p"};
  else out = {"iso-" + tag};
  out.push_back("iso2-" + tag);
  out.push_back("transport-" + tag);
  return out;
}

}  // namespace dgp::oracle
