#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "doctest.h"
#include "helpers.hpp"
#include "json.hpp"
#include "oracles.hpp"

#include "acx4/cli.hpp"
#include "acx4/document.hpp"
#include "acx4/reduce.hpp"

using namespace acx4;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "acx4");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("acx4-cli-test-" + std::to_string(::getpid()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    const auto p = path_ / name;
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

const char* kCp2 = R"({"format":"acx4-fans/1","fans":[{"vectors":[[1,0],[-1,1],[0,-1]]}]})";
const char* kCp2Rotated = R"({"format":"acx4-fans/1","fans":[{"vectors":[[0,-1],[1,0],[-1,1]]}]})";
const char* kMinimal = R"({"format":"acx4-fans/1","fans":[{"vectors":[[1,0],[0,1],[-1,0],[0,-1]]}]})";

}  // namespace

TEST_CASE("invariants prints a report") {
  TempDir dir;
  const auto r = run({"invariants", dir.write("cp2.json", kCp2)});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"format\":\"acx4-report/1\",\"a\":[1,1,1],\"euler\":3,\"todd\":1,\"signature\":1,"
                 "\"c1_sq\":9,\"c2\":3}\n");
}

TEST_CASE("minimize writes a log that replays") {
  TempDir dir;
  const auto cp2 = dir.write("cp2.json", kCp2);
  const auto log = dir.path("l.json");
  const auto m = run({"minimize", cp2, "--log", log});
  CHECK(m.code == 0);
  CHECK(m.out == std::string(kMinimal) + "\n");
  const auto r = run({"replay", "--log", log, cp2});
  CHECK(r.code == 0);
  CHECK(r.out == m.out);
  CHECK(run({"validate", log}).out == "valid acx4-log/1: 3 move(s)\n");
  // Replaying against another family fails on the first move.
  const auto bad = run({"replay", "--log", log, dir.write("min.json", kMinimal)});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("MoveInapplicable") != std::string::npos);
}

TEST_CASE("equiv") {
  TempDir dir;
  const auto a = dir.write("a.json", kCp2);
  const auto b = dir.write("b.json", kCp2Rotated);
  const auto reversed = dir.write(
      "r.json", R"({"format":"acx4-fans/1","fans":[{"vectors":[[0,1],[1,-1],[-1,0]]}]})");
  CHECK(run({"equiv", a, b}).out == "true\n");
  CHECK(run({"equiv", a, b}).code == 0);
  CHECK(run({"equiv", a, reversed}).out == "false\n");
  CHECK(run({"equiv", a, reversed, "--mode", "full"}).out == "true\n");
  CHECK(run({"equiv", a, dir.write("m.json", kMinimal)}).out == "false\n");
  CHECK(run({"equiv", a, b, "--mode", "sideways"}).code == 2);
}

TEST_CASE("convert round trip and graph rewrites") {
  TempDir dir;
  const auto cp2 = dir.write("cp2.json", kCp2);
  const auto g = run({"convert", "--to", "graph", cp2});
  CHECK(g.code == 0);
  const auto gpath = dir.write("g.json", g.out);
  CHECK(run({"convert", "--to", "fan", gpath}).out == std::string(kCp2) + "\n");
  CHECK(run({"equiv", cp2, gpath}).out == "true\n");

  const auto up = run({"blowup", "--vertex", "p0,1", gpath});
  CHECK(up.code == 0);
  const auto uppath = dir.write("up.json", up.out);
  CHECK(run({"invariants", uppath}).out.find("\"a\":[1,2,1]") != std::string::npos);
  const auto down = run({"blowdown", "--from", "p0,1'", "--to", "p0,1''", uppath});
  CHECK(down.code == 0);
  CHECK(run({"equiv", cp2, dir.write("down.json", down.out)}).out == "true\n");
  CHECK(run({"blowup", "--vertex", "nope", gpath}).code == 1);
  CHECK(run({"blowup", "--vertex", "p0,1", cp2}).code == 1);
}

TEST_CASE("fan rewrites") {
  TempDir dir;
  const auto cp2 = dir.write("cp2.json", kCp2);
  const auto up = run({"blowup", "--fan", "0", "--pos", "0", cp2});
  CHECK(up.out == R"({"format":"acx4-fans/1","fans":[{"vectors":[[1,0],[0,1],[-1,1],[0,-1]]}]})"
                  "\n");
  const auto down = run({"blowdown", "--fan", "0", "--pos", "1", dir.write("s1.json", up.out)});
  CHECK(down.out == std::string(kCp2) + "\n");
  const auto bad = run({"blowdown", "--fan", "0", "--pos", "0", cp2});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("NotBlowDownable") != std::string::npos);
  CHECK(run({"blowup", "--fan", "2", "--pos", "0", cp2}).code == 1);
  CHECK(run({"blowup", "--fan", "0", cp2}).code == 2);
  CHECK(run({"blowup", cp2}).code == 2);
}

TEST_CASE("normalize-complex, classify, render, generate") {
  TempDir dir;
  const auto cp2 = dir.write("cp2.json", kCp2);
  const auto n = run({"normalize-complex", cp2});
  REQUIRE(n.code == 0);
  const auto j = nlohmann::json::parse(n.out);
  CHECK(j["model"]["name"] == "CP1xCP1");
  CHECK(j["model"]["a"] == 1);
  CHECK(j["log"]["moves"].size() == 3);
  CHECK(parse_document(j["log"].dump()).format() == "acx4-log/1");

  const auto todd2 = dir.write(
      "t2.json", R"({"format":"acx4-fans/1","fans":[{"vectors":[[1,0],[2,1],[-3,-1],[4,1],[-5,-1]]}]})");
  const auto bad = run({"normalize-complex", todd2});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("NotToddOne") != std::string::npos);

  const auto c = nlohmann::json::parse(run({"classify", cp2}).out);
  CHECK(c["fans"][0]["normal_form"]["v2"] == nlohmann::json::array({-1, 1}));
  CHECK(c["fans"][0]["plumbing"].size() == 3);
  const auto sigma3 = dir.write(
      "s3.json", R"({"format":"acx4-fans/1","fans":[{"vectors":[[1,0],[0,1],[-1,3],[0,-1]]}]})");
  CHECK(nlohmann::json::parse(run({"classify", sigma3}).out)["fans"][0]["normal_form"]["a"] == 3);

  const auto svg = run({"render", "--format", "svg", cp2});
  CHECK(svg.code == 0);
  CHECK(svg.out.find("<svg") != std::string::npos);
  CHECK(run({"render", "--format", "dot", cp2}).out.find("digraph") != std::string::npos);
  CHECK(run({"render", "--format", "tikz", cp2}).out.find("tikzpicture") != std::string::npos);
  CHECK(run({"render", "--format", "png", cp2}).code == 2);

  const auto g1 = run({"generate", "--seed", "9", "--components", "2", "--blowups", "6"});
  CHECK(g1.code == 0);
  CHECK(g1.out == run({"generate", "--seed", "9", "--components", "2", "--blowups", "6"}).out);
  CHECK(run({"generate", "--seed", "9", "--components", "0", "--blowups", "6"}).code == 2);
  const auto signed_out =
      run({"generate", "--seed", "1", "--components", "2", "--blowups", "0", "--signs", "1", "-1"});
  CHECK(signed_out.out ==
        R"({"format":"acx4-fans/1","fans":[{"vectors":[[1,0],[0,1],[-1,0],[0,-1]]},{"vectors":[[1,0],[0,-1],[-1,0],[0,1]]}]})"
        "\n");
}

TEST_CASE("exit codes for usage and domain errors") {
  TempDir dir;
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"validate"}).code == 2);
  CHECK(run({"convert", "--to", "tree", dir.write("x.json", kCp2)}).code == 2);
  CHECK(run({"--help"}).code == 0);
  const auto missing = run({"validate", dir.path("missing.json")});
  CHECK(missing.code == 1);
  CHECK(!missing.err.empty());
  const auto broken = run({"validate", dir.write("b.json", "{\"format\":")});
  CHECK(broken.code == 1);
  CHECK(broken.err.find("ParseError") != std::string::npos);
  const auto bad_fan = run({"invariants", dir.write(
      "bad.json", R"({"format":"acx4-fans/1","fans":[{"vectors":[[1,0],[1,2],[0,-1]]}]})")});
  CHECK(bad_fan.code == 1);
  CHECK(bad_fan.err.find("NotABasis") != std::string::npos);
  CHECK(run({"invariants", dir.write("r.json", run({"invariants", dir.write("c.json", kCp2)}).out)}).code == 1);
}

TEST_CASE("fuzzed documents never escape as crashes") {
  TempDir dir;
  SeededRng rng(31337);
  std::vector<std::string> seeds;
  for (int t = 0; t < 40; ++t) {
    const auto fam = oracle::random_family(rng);
    seeds.push_back(emit_document({fam}));
    seeds.push_back(emit_document({family_to_graph(fam)}));
    seeds.push_back(emit_document({reduce_to_minimal(fam).log}));
  }
  const std::string alphabet = "{}[]\",:-0123456789abcdefnulltrue \n\\";
  const std::vector<std::vector<std::string>> commands = {
      {"validate"}, {"invariants"}, {"classify"}, {"convert", "--to", "graph"},
      {"render", "--format", "svg"}, {"render", "--format", "dot"}};
  const auto path = dir.path("fuzz.json");
  int failures = 0;
  for (int t = 0; t < 10000; ++t) {
    std::string text = seeds[rng.below(seeds.size())];
    const int edits = 1 + static_cast<int>(rng.below(4));
    for (int e = 0; e < edits && !text.empty(); ++e) {
      const std::size_t at = rng.below(text.size());
      switch (rng.below(5)) {
        case 0: text[at] = alphabet[rng.below(alphabet.size())]; break;
        case 1: text.erase(at, 1 + rng.below(8)); break;
        case 2: text.insert(at, 1, alphabet[rng.below(alphabet.size())]); break;
        case 3: text.insert(at, text.substr(rng.below(text.size()), rng.below(12))); break;
        default: text = text.substr(0, at); break;
      }
    }
    std::ofstream(path, std::ios::binary | std::ios::trunc) << text;
    auto args = commands[rng.below(commands.size())];
    args.push_back(path);
    const auto r = run(args);
    const bool ok = r.code == 0 || ((r.code == 1 || r.code == 2) && !r.err.empty());
    if (!ok || r.err.find("InternalInconsistency") != std::string::npos) {
      ++failures;
      MESSAGE("input: " << text << "\nerr: " << r.err);
    }
  }
  CHECK(failures == 0);
}
