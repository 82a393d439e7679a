#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dgp/cli.hpp"

namespace fs = std::filesystem;
using dgp::cli::run_cli;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string transcript(const CliRun& r) {
  return "exit: " + std::to_string(r.code) + "\n--- stdout\n" + r.out + "--- stderr\n" + r.err;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// One argument per line; "$DATA" expands to the data directory.
std::vector<std::string> read_args(const fs::path& p) {
  std::vector<std::string> args;
  std::istringstream in(slurp(p));
  for (std::string line; std::getline(in, line);) {
    if (const auto at = line.find("$DATA"); at != std::string::npos) line.replace(at, 5, DGP_DATA_DIR);
    args.push_back(line);
  }
  return args;
}

}  // namespace

TEST(Cli, SizeOfAList) {
  const CliRun r = run({"size", "--env", std::string("@") + DGP_DATA_DIR + "/list_top.env", "--code", "List⊤", "--value",
                     "in2 (k tt , rec in2 (k tt , rec in1 tt))"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2\n");
}

TEST(Cli, RoundtripNat) {
  const CliRun r = run({"roundtrip", "--from", "regular", "--to", "polyp", "--code", "NatC", "--max-size", "12"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("total: 21 checked, 0 failures\n"), std::string::npos) << r.out;
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"check", "--universe", "multirec", "--code", "ZigZagC", "--index", "inr.⋆", "--value",
                 "<in1 (refl , in1 <in2 (refl , <in1 (refl , in2 tt)>)>)>"})
                .code,
            1);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"check", "--universe", "regular", "--code", "U +", "--value", "tt"}).code, 2);
  EXPECT_EQ(run({"check", "--universe", "nope", "--code", "U", "--value", "tt"}).code, 2);
  EXPECT_EQ(run({"size", "--code", "List⊤", "--value", "in2 (k tt , rec in2 (k tt , rec in1 tt))", "--fuel", "1"}).code,
            3);
  EXPECT_EQ(run({"check", "--universe", "multirec", "--code", "ZigZagC", "--index", "x", "--value", "tt"}).code, 4);
  const CliRun r = run({"convert", "--from", "instant", "--to", "regular", "--code", "List⊤", "--value", "tt"});
  EXPECT_EQ(r.code, 4);
  EXPECT_EQ(r.err.rfind("error: ", 0), 0u);
}

TEST(Cli, HelpGoesToStdout) {
  const CliRun r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("roundtrip"), std::string::npos);
  EXPECT_TRUE(r.err.empty());
}

// Every tests/golden/NAME.args is run twice; both transcripts must equal NAME.out byte for byte.
// Set DGP_UPDATE_GOLDEN=1 to rewrite the .out files.
TEST(Cli, GoldenTranscripts) {
  const bool update = std::getenv("DGP_UPDATE_GOLDEN") != nullptr;
  std::size_t seen = 0;
  std::vector<fs::path> cases;
  for (const auto& e : fs::directory_iterator(DGP_GOLDEN_DIR))
    if (e.path().extension() == ".args") cases.push_back(e.path());
  std::sort(cases.begin(), cases.end());
  for (const fs::path& p : cases) {
    ++seen;
    const auto args = read_args(p);
    const std::string first = transcript(run(args));
    const std::string second = transcript(run(args));
    EXPECT_EQ(first, second) << p.filename();
    fs::path want = p;
    want.replace_extension(".out");
    if (update) std::ofstream(want, std::ios::binary) << first;
    EXPECT_EQ(first, slurp(want)) << p.filename();
  }
  EXPECT_GE(seen, 10u);
}
