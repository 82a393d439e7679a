#pragma once

// Uniform view of the five arrows: a Stage is a code together with whatever
// context its universe needs to name one set of values (μ C, μ C A, μ C i,
// ⟦C⟧ r o, or a root code in an environment). Steps lift stages and convert
// values between adjacent stages; a path chains steps.

#include <optional>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "dgp/embed/indexed_instant.hpp"
#include "dgp/embed/multirec_indexed.hpp"
#include "dgp/embed/polyp_indexed.hpp"
#include "dgp/embed/regular_multirec.hpp"
#include "dgp/embed/regular_polyp.hpp"

namespace dgp::embed {

/// μ code
struct RegularStage {
  regular::Code code;
};

/// μ code param; a ⊥ param marks a code lifted from Regular.
struct PolyPStage {
  polyp::Code code;
  PayloadSlot param;
};

/// μ code index
struct MultirecStage {
  multirec::Code code;
  IndexLabel index;
};

/// ⟦code⟧ r out
struct IndexedStage {
  indexed::Code code;
  indexed::SlotAssignment r;
  IndexLabel out;
};

/// ⟦code⟧ in env
struct InstantStage {
  instant::CodeEnv env;
  instant::Code code;
};

using Stage = std::variant<RegularStage, PolyPStage, MultirecStage, IndexedStage, InstantStage>;

enum class Universe : std::uint8_t { Regular, PolyP, Multirec, Indexed, Instant };

inline const char* universe_name(Universe u) {
  switch (u) {
    case Universe::Regular: return "regular";
    case Universe::PolyP: return "polyp";
    case Universe::Multirec: return "multirec";
    case Universe::Indexed: return "indexed";
    case Universe::Instant: return "instant";
  }
  return "?";
}

inline Universe universe_of(const Stage& s) { return static_cast<Universe>(s.index()); }

enum class Step : std::uint8_t { RegularToPolyP, RegularToMultirec, PolyPToIndexed, MultirecToIndexed, IndexedToInstant };

inline constexpr Step kAllSteps[] = {Step::RegularToPolyP, Step::RegularToMultirec, Step::PolyPToIndexed,
                                     Step::MultirecToIndexed, Step::IndexedToInstant};

/// Short tag used in property names, e.g. "r-p".
inline const char* step_tag(Step s) {
  switch (s) {
    case Step::RegularToPolyP: return "r-p";
    case Step::RegularToMultirec: return "r-m";
    case Step::PolyPToIndexed: return "p-i";
    case Step::MultirecToIndexed: return "m-i";
    case Step::IndexedToInstant: return "i-ig";
  }
  return "?";
}

inline Universe step_source(Step s) {
  switch (s) {
    case Step::RegularToPolyP:
    case Step::RegularToMultirec: return Universe::Regular;
    case Step::PolyPToIndexed: return Universe::PolyP;
    case Step::MultirecToIndexed: return Universe::Multirec;
    case Step::IndexedToInstant: return Universe::Indexed;
  }
  return Universe::Regular;
}

inline Universe step_target(Step s) {
  switch (s) {
    case Step::RegularToPolyP: return Universe::PolyP;
    case Step::RegularToMultirec: return Universe::Multirec;
    case Step::PolyPToIndexed:
    case Step::MultirecToIndexed: return Universe::Indexed;
    case Step::IndexedToInstant: return Universe::Instant;
  }
  return Universe::Instant;
}

/// The step from one universe to the adjacent one, if the diagram has it.
inline std::optional<Step> step_between(Universe from, Universe to) {
  for (Step s : kAllSteps)
    if (step_source(s) == from && step_target(s) == to) return s;
  return std::nullopt;
}

class IncompatibleStep : public Error {
 public:
  IncompatibleStep(Step s, const Stage& st)
      : Error(std::string("step ") + step_tag(s) + " cannot start from a " + universe_name(universe_of(st)) + " stage") {}
};

template <class T>
const T& expect_stage(Step s, const Stage& st) {
  if (const T* t = std::get_if<T>(&st)) return *t;
  throw IncompatibleStep(s, st);
}

/// The target stage of `step` applied to `source`.
inline Stage lift_stage(Step step, const Stage& source) {
  switch (step) {
    case Step::RegularToPolyP:
      return PolyPStage{lift_r_to_p(expect_stage<RegularStage>(step, source).code), bottom_param()};
    case Step::RegularToMultirec:
      return MultirecStage{lift_r_to_m(expect_stage<RegularStage>(step, source).code), star()};
    case Step::PolyPToIndexed: {
      const auto& p = expect_stage<PolyPStage>(step, source);
      return IndexedStage{lift_p_to_i_mu(p.code), polyp_mu_assignment(p.param), star()};
    }
    case Step::MultirecToIndexed: {
      const auto& m = expect_stage<MultirecStage>(step, source);
      return IndexedStage{lift_m_to_i_mu(m.code), {}, m.index};
    }
    case Step::IndexedToInstant: {
      const auto& i = expect_stage<IndexedStage>(step, source);
      IgLift l = lift_i_to_ig(i.code, kset_assignment(i.r));
      return InstantStage{std::move(l.env), l.roots.at(i.out)};
    }
  }
  throw IncompatibleStep(step, source);
}

/// Converts a value across one step; `source` is always the source-side stage.
inline Value convert_step(Step step, const Stage& source, const Value& v, Direction dir, std::size_t fuel) {
  const bool fwd = dir == Direction::Forward;
  switch (step) {
    case Step::RegularToPolyP: {
      const auto& c = expect_stage<RegularStage>(step, source).code;
      return fwd ? from_mu_r_p(c, v, fuel) : to_mu_r_p(c, v, fuel);
    }
    case Step::RegularToMultirec: {
      const auto& c = expect_stage<RegularStage>(step, source).code;
      return fwd ? from_mu_r_m(c, v, fuel) : to_mu_r_m(c, v, fuel);
    }
    case Step::PolyPToIndexed: {
      const auto& c = expect_stage<PolyPStage>(step, source).code;
      return fwd ? from_mu_p_i(c, v, fuel) : to_mu_p_i(c, v, fuel);
    }
    case Step::MultirecToIndexed: {
      const auto& m = expect_stage<MultirecStage>(step, source);
      return fwd ? from_mu_m_i(m.code, m.index, v, fuel) : to_mu_m_i(m.code, m.index, v, fuel);
    }
    case Step::IndexedToInstant: {
      const auto& i = expect_stage<IndexedStage>(step, source);
      return fwd ? from_i_ig(i.code, {}, i.out, v, fuel) : to_i_ig(i.code, {}, i.out, v, fuel);
    }
  }
  throw IncompatibleStep(step, source);
}

/// Does `v` inhabit the value set named by the stage?
inline bool stage_conforms(const Stage& st, const Value& v, std::size_t fuel) {
  return std::visit(
      [&](const auto& s) -> bool {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, RegularStage>) return regular::conform_mu(s.code, v);
        else if constexpr (std::is_same_v<T, PolyPStage>) return polyp::conform_mu(s.code, s.param, v);
        else if constexpr (std::is_same_v<T, MultirecStage>) return multirec::conform_mu(s.code, s.index, v);
        else if constexpr (std::is_same_v<T, IndexedStage>) return indexed::conform(s.code, s.r, s.out, v);
        else return instant::conform(s.env, s.code, v, fuel);
      },
      st);
}

/// Every stage visited by a path, the source first.
inline std::vector<Stage> path_stages(const std::vector<Step>& steps, const Stage& source) {
  std::vector<Stage> out{source};
  for (Step s : steps) out.push_back(lift_stage(s, out.back()));
  return out;
}

/// Applies a path forwards (source to final stage) or backwards (final stage
/// back to the source). The empty path is the identity.
inline Value compose_path(const std::vector<Step>& steps, const Stage& source, const Value& v, Direction dir,
                          std::size_t fuel) {
  const std::vector<Stage> stages = path_stages(steps, source);
  Value x = v;
  if (dir == Direction::Forward) {
    for (std::size_t k = 0; k < steps.size(); ++k) x = convert_step(steps[k], stages[k], x, dir, fuel);
  } else {
    for (std::size_t k = steps.size(); k-- > 0;) x = convert_step(steps[k], stages[k], x, dir, fuel);
  }
  return x;
}

/// Default path between two universes: the direct arrow, or the shortest
/// chain; Regular reaches Indexed through PolyP unless `via_multirec`.
inline std::vector<Step> default_path(Universe from, Universe to, bool via_multirec = false) {
  if (from == to) return {};
  const Step r_next = via_multirec ? Step::RegularToMultirec : Step::RegularToPolyP;
  const Step r_mid = via_multirec ? Step::MultirecToIndexed : Step::PolyPToIndexed;
  std::vector<Step> out;
  Universe at = from;
  while (at != to) {
    std::optional<Step> s;
    switch (at) {
      case Universe::Regular:
        if (to == Universe::PolyP) s = Step::RegularToPolyP;
        else if (to == Universe::Multirec) s = Step::RegularToMultirec;
        else s = r_next;
        break;
      case Universe::PolyP:
        if (to == Universe::Indexed || to == Universe::Instant) s = Step::PolyPToIndexed;
        break;
      case Universe::Multirec:
        if (to == Universe::Indexed || to == Universe::Instant) s = Step::MultirecToIndexed;
        break;
      case Universe::Indexed:
        if (to == Universe::Instant) s = Step::IndexedToInstant;
        break;
      case Universe::Instant:
        break;
    }
    if (!s) throw Error(std::string("no embedding from ") + universe_name(from) + " to " + universe_name(to));
    if (at == Universe::Regular && s == r_next && (to == Universe::Indexed || to == Universe::Instant)) {
      out.push_back(*s);
      out.push_back(r_mid);
      at = Universe::Indexed;
      continue;
    }
    out.push_back(*s);
    at = step_target(*s);
  }
  return out;
}

}  // namespace dgp::embed
