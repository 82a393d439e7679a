// One line per acceptance criterion; exit status is the number of failures.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "dgp/cli.hpp"
#include "dgp/dsl.hpp"
#include "dgp/oracle/corpus.hpp"
#include "dgp/oracle/enumerate.hpp"
#include "dgp/oracle/properties.hpp"

using namespace dgp;
using namespace dgp::oracle;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

/// Runs properties; passes iff every one checks something and none fail.
Outcome properties(const std::vector<std::string>& names, const Corpus& c, std::size_t max_size) {
  std::size_t checked = 0, failures = 0;
  std::string first;
  for (const auto& n : names) {
    const ConversionReport r = run_property(n, c, EnumBudget{max_size, 64, 2});
    checked += r.checked;
    failures += r.failures.size();
    if (r.checked == 0 && first.empty()) first = n + " checked nothing";
    if (!r.ok() && first.empty()) first = to_string(r);
  }
  std::string d = std::to_string(names.size()) + " properties, " + std::to_string(checked) + " checks, " +
                  std::to_string(failures) + " failures";
  if (!first.empty()) d += "; " + first;
  return {failures == 0 && first.empty(), d};
}

Outcome golden_examples() {
  std::string bad;
  const auto need = [&](bool ok, const char* what) {
    if (!ok && bad.empty()) bad = what;
  };
  need(regular::conform_mu(regular::nat_code(), regular::a_nat()), "aNat conforms");
  need(regular::cata(regular::nat_code(), regular::to_nat(), regular::a_nat(), 16) == Value::payload("nat", 2),
       "toNat aNat = 2");
  const PayloadSlot top{"⊤"};
  need(polyp::conform_mu(polyp::rose_code(), top, polyp::s_rose()), "sRose conforms");
  need(polyp::conform_mu(polyp::rose_code(), top, polyp::l_rose()), "lRose conforms");
  need(multirec::conform_mu(multirec::zigzag_code(), multirec::zig_index(), multirec::zigzag_end()),
       "zigZagEnd conforms at inl.⋆");
  need(!multirec::conform_mu(multirec::zigzag_code(), multirec::zag_index(), multirec::zigzag_end()),
       "zigZagEnd fails at inr.⋆");
  const instant::CodeEnv env = instant::list_top_env();
  need(instant::size(env, env.at(instant::kListTopName), instant::a_list(), 16) == 2, "size aList = 2");
  return {bad.empty(), bad.empty() ? "nat#2, roses, zigzag, size 2" : "failed: " + bad};
}

std::vector<std::string> per_step(const std::vector<std::string>& prefixes) {
  std::vector<std::string> out;
  for (const auto& p : prefixes)
    for (embed::Step s : embed::kAllSteps) {
      const std::string tag = embed::step_tag(s);
      out.push_back(p == "iso-" && s == embed::Step::RegularToPolyP ? "isoMu-r-p" : p + tag);
    }
  return out;
}

Outcome pitfall() {
  const Value w = tree_of_lists_witness();
  const PayloadSlot a{"a"};
  const bool naive = polyp::conform_mu(naive_tree_of_lists_code(), a, w);
  const bool fixed = polyp::conform_mu(polyp::tree_of_lists_code(), a, w);
  return {!naive && fixed, std::string("TreeC @ ListC ") + (naive ? "accepts" : "rejects") +
                               ", (ListC @ P) + I * I " + (fixed ? "accepts" : "rejects")};
}

Outcome dsl_round_trip() {
  const Corpus c = standard_corpus();
  std::size_t codes = 0, values = 0;
  std::string bad;
  const auto need = [&](bool ok, const std::string& what) {
    if (!ok && bad.empty()) bad = what;
  };
  try {
    for (const auto& e : c.regular) need(dsl::parse_regular(regular::to_string(e.code)) == e.code, e.name), ++codes;
    for (const auto& e : c.polyp) need(dsl::parse_polyp(polyp::to_string(e.code)) == e.code, e.name), ++codes;
    for (const auto& e : c.multirec) need(dsl::parse_multirec(multirec::to_string(e.code)) == e.code, e.name), ++codes;
    for (const auto& e : c.indexed) need(dsl::parse_indexed(indexed::to_string(e.code)) == e.code, e.name), ++codes;
    for (const auto& e : c.instant) {
      need(dsl::parse_env(instant::to_string(e.env)) == e.env, e.name);
      need(dsl::parse_instant(instant::to_string(e.code)) == e.code, e.name);
      ++codes;
    }
    for (auto u : {embed::Universe::Regular, embed::Universe::PolyP, embed::Universe::Multirec,
                   embed::Universe::Indexed, embed::Universe::Instant})
      for (const auto& [name, st] : c.stages(u))
        for (const Value& v : enumerate_stage(st, EnumBudget{10, 64, 2})) {
          need(dsl::parse_value(to_string(v)) == v, name + " " + to_string(v));
          ++values;
        }
  } catch (const Error& e) {
    need(false, e.what());
  }

  // golden transcripts, each run twice
  std::size_t transcripts = 0;
  std::vector<fs::path> cases;
  for (const auto& e : fs::directory_iterator(DGP_GOLDEN_DIR))
    if (e.path().extension() == ".args") cases.push_back(e.path());
  std::sort(cases.begin(), cases.end());
  const auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  };
  for (const fs::path& p : cases) {
    std::vector<std::string> args;
    std::istringstream in(slurp(p));
    for (std::string line; std::getline(in, line);) {
      if (const auto at = line.find("$DATA"); at != std::string::npos) line.replace(at, 5, DGP_DATA_DIR);
      args.push_back(line);
    }
    std::string runs[2];
    for (auto& r : runs) {
      std::ostringstream out, err;
      const int code = cli::run_cli(args, out, err);
      r = "exit: " + std::to_string(code) + "\n--- stdout\n" + out.str() + "--- stderr\n" + err.str();
    }
    fs::path want = p;
    want.replace_extension(".out");
    need(runs[0] == runs[1], p.filename().string() + " differs between runs");
    need(runs[0] == slurp(want), p.filename().string() + " differs from its golden transcript");
    ++transcripts;
  }
  need(transcripts > 0, "no golden transcripts found");
  return {bad.empty(), std::to_string(codes) + " codes, " + std::to_string(values) + " values, " +
                           std::to_string(transcripts) + " transcripts" + (bad.empty() ? "" : "; failed: " + bad)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_s;  // 0: no time limit
    std::function<Outcome()> run;
  };
  const Corpus corpus = standard_corpus();
  Corpus map_commute;
  for (const char* n : {"NatC", "BTreeC"}) map_commute.regular.push_back(*find_entry(corpus.regular, n));

  const std::vector<Criterion> criteria{
      {"golden examples", 1.0, golden_examples},
      {"isomorphism suites, size <= 12", 60.0,
       [&] {
         auto names = per_step({"iso-", "iso2-"});
         names.push_back("iso-r-p");
         return properties(names, corpus, 12);
       }},
      {"functor laws, size <= 10", 0,
       [&] {
         return properties({"map-id-r", "map-comp-r", "map-id-p", "map-comp-p", "pmap-id", "pmap-comp", "map-id-m",
                            "map-comp-m", "map-id-i", "map-comp-i"},
                           corpus, 10);
       }},
      {"mapCommute on NatC and BTreeC, size <= 10", 0, [&] { return properties({"mapCommute-r-p"}, map_commute, 10); }},
      {"parallel-composition lemmas, size <= 10", 0,
       [&] { return properties({"par-comp", "par-cong", "par-id"}, corpus, 10); }},
      {"composition pitfall", 0, pitfall},
      {"conformance transport, size <= 12", 0, [&] { return properties(per_step({"transport-"}), corpus, 12); }},
      {"DSL round trip and CLI transcripts", 0, dsl_round_trip},
  };

  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (criteria[k].limit_s > 0 && secs >= criteria[k].limit_s) {
      o.pass = false;
      o.detail += "; over the time limit";
    }
    failed += o.pass ? 0 : 1;
    std::ostringstream line;
    line.precision(3);
    line << std::fixed << (o.pass ? "PASS" : "FAIL") << " criterion " << k + 1 << ": " << criteria[k].name << " ("
         << o.detail << ", " << secs << " s)";
    std::cout << line.str() << "\n";
  }
  return failed;
}
