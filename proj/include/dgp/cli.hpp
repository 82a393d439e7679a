#pragma once

// Command-line front end. Everything goes through run_cli so tests can drive
// it with string streams.
//
// exit codes: 0 ok, 1 non-conformance or property failures, 2 usage or parse
// error, 3 fuel exhausted, 4 any other domain error.

#include <CLI11.hpp>

#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "dgp/dsl.hpp"
#include "dgp/embed/path.hpp"
#include "dgp/oracle/corpus.hpp"
#include "dgp/oracle/enumerate.hpp"
#include "dgp/oracle/properties.hpp"

namespace dgp::cli {

enum Exit : int { kOk = 0, kFailed = 1, kUsage = 2, kFuel = 3, kDomain = 4 };

/// Bad command-line input that CLI11 cannot see (unknown names, unreadable files).
class UsageError : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// "@path" reads a file; anything else is literal text.
inline std::string text_arg(const std::string& arg) { return !arg.empty() && arg[0] == '@' ? read_file(arg.substr(1)) : arg; }

inline embed::Universe universe_from(const std::string& name) {
  for (auto u : {embed::Universe::Regular, embed::Universe::PolyP, embed::Universe::Multirec, embed::Universe::Indexed,
                 embed::Universe::Instant})
    if (name == embed::universe_name(u)) return u;
  throw UsageError("unknown universe " + name);
}

inline const std::vector<std::string>& universe_names() {
  static const std::vector<std::string> names{"regular", "polyp", "multirec", "indexed", "instant"};
  return names;
}

/// What the user said about the source code of a command.
struct StageArgs {
  std::string universe = "regular";
  std::string code;
  std::string param;  // polyp / indexed payload sort
  std::string index;  // multirec index, indexed output
  std::string env;    // instant environment (text or @file)
};

inline void add_stage_options(CLI::App* sub, StageArgs& a, const char* universe_flag) {
  sub->add_option(universe_flag, a.universe, "universe of the code")
      ->check(CLI::IsMember(universe_names()))
      ->required();
  sub->add_option("--code", a.code, "corpus name, @file, or code text")->required();
  sub->add_option("--param", a.param, "payload sort of parameter positions (default from corpus, else ⊤)");
  sub->add_option("--index", a.index, "multirec index or indexed output (default: first)");
  sub->add_option("--env", a.env, "instant code environment, text or @file");
}

inline IndexLabel pick(const IndexSet& set, const std::string& wanted, const char* what) {
  if (wanted.empty()) {
    if (set.empty()) throw UsageError(std::string("code has no ") + what);
    return *set.begin();
  }
  const IndexLabel l = dsl::parse_label(wanted);
  if (!set.contains(l)) throw IndexNotInSet(l.to_string());
  return l;
}

inline PayloadSlot param_or(const std::string& param, const PayloadSlot& fallback) {
  return param.empty() ? fallback : PayloadSlot{param};
}

inline embed::Stage build_stage(const StageArgs& a, const oracle::Corpus& corpus) {
  using namespace embed;
  const PayloadSlot top{"⊤"};
  switch (universe_from(a.universe)) {
    case Universe::Regular:
      if (const auto* e = oracle::find_entry(corpus.regular, a.code)) return RegularStage{e->code};
      return RegularStage{dsl::parse_regular(text_arg(a.code))};
    case Universe::PolyP:
      if (const auto* e = oracle::find_entry(corpus.polyp, a.code)) return PolyPStage{e->code, param_or(a.param, e->param)};
      return PolyPStage{dsl::parse_polyp(text_arg(a.code)), param_or(a.param, top)};
    case Universe::Multirec: {
      const auto* e = oracle::find_entry(corpus.multirec, a.code);
      multirec::Code c = e ? e->code : dsl::parse_multirec(text_arg(a.code));
      IndexLabel i = pick(c.indices, a.index, "indices");
      return MultirecStage{std::move(c), std::move(i)};
    }
    case Universe::Indexed: {
      if (const auto* e = oracle::find_entry(corpus.indexed, a.code)) {
        indexed::SlotAssignment r = e->r;
        if (!a.param.empty())
          for (auto& [l, s] : r) s = PayloadSlot{a.param};
        return IndexedStage{e->code, std::move(r), pick(e->code.out(), a.index, "outputs")};
      }
      indexed::Code c = dsl::parse_indexed(text_arg(a.code));
      indexed::SlotAssignment r;
      for (const auto& l : c.in()) r.emplace(l, param_or(a.param, top));
      IndexLabel o = pick(c.out(), a.index, "outputs");
      return IndexedStage{std::move(c), std::move(r), std::move(o)};
    }
    case Universe::Instant: {
      const auto* e = oracle::find_entry(corpus.instant, a.code);
      if (e && a.env.empty()) return InstantStage{e->env, e->code};
      instant::CodeEnv env = a.env.empty() ? instant::CodeEnv{} : dsl::parse_env(text_arg(a.env));
      // a bare name bound in the environment stands for its definition
      instant::Code c = env.contains(a.code) ? env.at(a.code) : dsl::parse_instant(text_arg(a.code));
      if (!instant::refs_resolve(env, c)) throw MalformedValue("code refers to names missing from the environment");
      return InstantStage{std::move(env), std::move(c)};
    }
  }
  throw UsageError("unknown universe");
}

/// Renders the code of a stage in its universe's syntax.
inline std::string stage_code_text(const embed::Stage& st) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, embed::RegularStage>) return regular::to_string(s.code) + "\n";
        else if constexpr (std::is_same_v<T, embed::PolyPStage>) return polyp::to_string(s.code) + "\n";
        else if constexpr (std::is_same_v<T, embed::MultirecStage>)
          return multirec::to_string(s.code) + "\nroot: " + s.index.to_string() + "\n";
        else if constexpr (std::is_same_v<T, embed::IndexedStage>)
          return indexed::to_string(s.code) + "\nroot: " + s.out.to_string() + "\n";
        else return instant::to_string(s.env) + "root = " + instant::to_string(s.code) + "\n";
      },
      st);
}

inline std::vector<embed::Step> path_for(const std::string& from, const std::string& to, bool via_multirec) {
  return embed::default_path(universe_from(from), universe_from(to), via_multirec);
}

/// A corpus holding one code and its lifts along a path, all under one name.
inline oracle::Corpus corpus_of(const std::string& name, const std::vector<embed::Stage>& stages) {
  oracle::Corpus c;
  for (const embed::Stage& st : stages) {
    std::visit(
        [&](const auto& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, embed::RegularStage>) c.regular.push_back({name, s.code});
          else if constexpr (std::is_same_v<T, embed::PolyPStage>) c.polyp.push_back({name, s.code, s.param});
          else if constexpr (std::is_same_v<T, embed::MultirecStage>) c.multirec.push_back({name, s.code});
          else if constexpr (std::is_same_v<T, embed::IndexedStage>) c.indexed.push_back({name, s.code, s.r});
          else c.instant.push_back({name, s.env, s.code});
        },
        st);
  }
  return c;
}

inline int print_reports(const std::vector<std::string>& names, const oracle::Corpus& corpus,
                         const oracle::EnumBudget& b, std::ostream& out) {
  std::size_t checked = 0, failures = 0;
  for (const auto& n : names) {
    const oracle::ConversionReport r = oracle::run_property(n, corpus, b);
    out << oracle::to_string(r) << "\n";
    checked += r.checked;
    failures += r.failures.size();
  }
  out << "total: " << checked << " checked, " << failures << " failures\n";
  return failures == 0 ? kOk : kFailed;
}

}  // namespace detail

/// Runs one command line (without the program name).
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace detail;
  CLI::App app{"Convert and check values across generic-programming universes", "dgp"};
  app.require_subcommand(1);

  // check
  StageArgs check_a;
  std::string check_value;
  std::size_t check_fuel = 0;
  auto* check = app.add_subcommand("check", "does a value conform to a code");
  add_stage_options(check, check_a, "--universe");
  check->add_option("--value", check_value, "value text or @file")->required();
  check->add_option("--fuel", check_fuel, "unfolding budget (default: value size)");

  // lift
  StageArgs lift_a;
  std::string lift_to;
  bool lift_via_m = false;
  auto* lift = app.add_subcommand("lift", "translate a code into a richer universe");
  add_stage_options(lift, lift_a, "--from");
  lift->add_option("--to", lift_to, "target universe")->check(CLI::IsMember(universe_names()))->required();
  lift->add_flag("--via-multirec", lift_via_m, "go from regular to indexed through multirec");

  // convert
  StageArgs conv_a;
  std::string conv_to, conv_value, conv_dir = "fwd";
  bool conv_via_m = false;
  std::size_t conv_fuel = 0;
  auto* conv = app.add_subcommand("convert", "carry a value along the embeddings");
  add_stage_options(conv, conv_a, "--from");
  conv->add_option("--to", conv_to, "target universe")->check(CLI::IsMember(universe_names()))->required();
  conv->add_option("--value", conv_value, "value text or @file")->required();
  conv->add_option("--dir", conv_dir, "fwd: source to target; bwd: target back to source")
      ->check(CLI::IsMember({"fwd", "bwd"}));
  conv->add_flag("--via-multirec", conv_via_m, "go from regular to indexed through multirec");
  conv->add_option("--fuel", conv_fuel, "unfolding budget (default: value size)");

  // roundtrip
  StageArgs rt_a;
  rt_a.universe.clear();
  std::string rt_to;
  std::size_t rt_size = 12;
  bool rt_via_m = false;
  auto* rt = app.add_subcommand("roundtrip", "run the isomorphism suites (default: every arrow, whole corpus)");
  rt->add_option("--from", rt_a.universe, "source universe")->check(CLI::IsMember(universe_names()));
  rt->add_option("--to", rt_to, "target universe")->check(CLI::IsMember(universe_names()));
  rt->add_option("--code", rt_a.code, "restrict to one code: corpus name, @file, or code text");
  rt->add_option("--param", rt_a.param, "payload sort of parameter positions");
  rt->add_option("--index", rt_a.index, "multirec index or indexed output");
  rt->add_option("--env", rt_a.env, "instant code environment");
  rt->add_option("--max-size", rt_size, "largest value size enumerated");
  rt->add_flag("--via-multirec", rt_via_m, "go from regular to indexed through multirec");

  // enum
  StageArgs en_a;
  std::size_t en_size = 6, en_width = 2;
  auto* en = app.add_subcommand("enum", "list every value of a code up to a size");
  add_stage_options(en, en_a, "--universe");
  en->add_option("--max-size", en_size, "largest value size");
  en->add_option("--payload-width", en_width, "tokens per payload sort");

  // laws
  StageArgs laws_a;
  laws_a.universe = "all";
  std::vector<std::string> laws_props;
  std::size_t laws_size = 10;
  auto* laws = app.add_subcommand("laws", "run the functor laws (default: every universe, whole corpus)");
  std::vector<std::string> law_universes = universe_names();
  law_universes.emplace_back("all");
  laws->add_option("--universe", laws_a.universe, "universe whose laws to run")->check(CLI::IsMember(law_universes));
  laws->add_option("--code", laws_a.code, "restrict to one code: corpus name, @file, or code text");
  laws->add_option("--param", laws_a.param, "payload sort of parameter positions");
  laws->add_option("--index", laws_a.index, "multirec index or indexed output");
  laws->add_option("--env", laws_a.env, "instant code environment");
  laws->add_option("--property", laws_props, "run these properties instead")
      ->check(CLI::IsMember(oracle::property_names()));
  laws->add_option("--max-size", laws_size, "largest value size enumerated");

  // size
  StageArgs size_a;
  size_a.universe = "instant";
  std::string size_value;
  std::size_t size_fuel = 0;
  auto* size = app.add_subcommand("size", "count the payloads of an instant value");
  size->add_option("--code", size_a.code, "corpus name, @file, or code text")->required();
  size->add_option("--env", size_a.env, "code environment, text or @file");
  size->add_option("--value", size_value, "value text or @file")->required();
  size->add_option("--fuel", size_fuel, "unfolding budget (default: value size)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  const auto fuel_for = [](std::size_t given, const Value& v) { return given != 0 ? given : value_size(v); };

  try {
    const oracle::Corpus corpus = oracle::standard_corpus();
    if (check->parsed()) {
      const embed::Stage st = build_stage(check_a, corpus);
      const Value v = dsl::parse_value(text_arg(check_value));
      if (embed::stage_conforms(st, v, fuel_for(check_fuel, v))) {
        out << "conforms\n";
        return kOk;
      }
      out << "does not conform\n";
      return kFailed;
    }
    if (lift->parsed()) {
      const embed::Stage src = build_stage(lift_a, corpus);
      const auto steps = path_for(lift_a.universe, lift_to, lift_via_m);
      const auto stages = embed::path_stages(steps, src);
      if (!steps.empty() && steps.back() == embed::Step::IndexedToInstant) {
        // all outputs at once: one environment, one root per output
        const auto& ix = std::get<embed::IndexedStage>(stages[stages.size() - 2]);
        const embed::IgLift l = embed::lift_i_to_ig(ix.code, embed::kset_assignment(ix.r));
        out << instant::to_string(l.env);
        for (const auto& o : ix.code.out())
          out << "root " << o.to_string() << " = " << instant::to_string(l.roots.at(o)) << "\n";
        return kOk;
      }
      out << stage_code_text(stages.back());
      return kOk;
    }
    if (conv->parsed()) {
      const bool conv_back = conv_dir == "bwd";
      const embed::Stage src = build_stage(conv_a, corpus);
      const auto steps = path_for(conv_a.universe, conv_to, conv_via_m);
      const auto stages = embed::path_stages(steps, src);
      const Value v = dsl::parse_value(text_arg(conv_value));
      const std::size_t fuel = fuel_for(conv_fuel, v);
      const embed::Stage& input_stage = conv_back ? stages.back() : stages.front();
      if (!embed::stage_conforms(input_stage, v, fuel)) {
        err << "error: value does not conform to the " << embed::universe_name(embed::universe_of(input_stage))
            << " code\n";
        return kFailed;
      }
      out << to_string(embed::compose_path(steps, src, v, conv_back ? embed::Direction::Backward
                                                                     : embed::Direction::Forward,
                                           fuel))
          << "\n";
      return kOk;
    }
    if (rt->parsed()) {
      if (rt_a.universe.empty() != rt_to.empty()) throw UsageError("--from and --to go together");
      if (!rt_a.code.empty() && rt_a.universe.empty()) throw UsageError("--code needs --from and --to");
      std::vector<embed::Step> steps(std::begin(embed::kAllSteps), std::end(embed::kAllSteps));
      if (!rt_to.empty()) steps = path_for(rt_a.universe, rt_to, rt_via_m);
      std::vector<std::string> names;
      for (auto s : steps)
        for (const auto& n : oracle::iso_properties(s)) names.push_back(n);
      const oracle::Corpus c =
          rt_a.code.empty() ? corpus : corpus_of(rt_a.code, embed::path_stages(steps, build_stage(rt_a, corpus)));
      return print_reports(names, c, oracle::EnumBudget{rt_size, 64, 2}, out);
    }
    if (en->parsed()) {
      const embed::Stage st = build_stage(en_a, corpus);
      for (const Value& v : oracle::enumerate_stage(st, oracle::EnumBudget{en_size, 64, en_width}))
        out << to_string(v) << "\n";
      return kOk;
    }
    if (laws->parsed()) {
      if (!laws_a.code.empty() && laws_a.universe == "all") throw UsageError("--code needs --universe");
      std::vector<std::string> names = laws_props;
      if (names.empty())
        for (const auto& u : universe_names())
          if (laws_a.universe == "all" || laws_a.universe == u)
            for (const auto& n : oracle::law_properties(universe_from(u))) names.push_back(n);
      const oracle::Corpus c = laws_a.code.empty() ? corpus : corpus_of(laws_a.code, {build_stage(laws_a, corpus)});
      return print_reports(names, c, oracle::EnumBudget{laws_size, 64, 2}, out);
    }
    if (size->parsed()) {
      const auto st = std::get<embed::InstantStage>(build_stage(size_a, corpus));
      const Value v = dsl::parse_value(text_arg(size_value));
      const std::size_t fuel = fuel_for(size_fuel, v);
      if (!instant::conform(st.env, st.code, v, fuel)) {
        err << "error: value does not conform to the code\n";
        return kFailed;
      }
      out << instant::size(st.env, st.code, v, fuel) << "\n";
      return kOk;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const FuelExhausted& e) {
    err << "error: " << e.what() << "\n";
    return kFuel;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  }
  return kUsage;
}

}  // namespace dgp::cli
