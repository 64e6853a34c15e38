#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "thicket/cli/commands.hpp"

using namespace thicket;

namespace {

struct Run {
  int exit;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(THICKET_DATA_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string scratch(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("thicket-test-" + name);
  std::ofstream(path) << text;
  return path.string();
}

const std::string kMinimal =
    R"({"ring": {"char": 0, "vars": [{"name": "x", "degree": 2}]}, "primes": [{"name": "zero", "gens": [], "seq": [], "cert": "1"}]})";

}  // namespace

TEST_CASE("exit code matrix") {
  std::string q = data("qxy.json");
  CHECK(run({"--input", q, "validate"}).exit == kExitOk);
  CHECK(run({"--input", q, "support", "kx"}).exit == kExitOk);
  CHECK(run({"--input", q, "check", "nakayama", "--seed", "7", "--n", "50"}).exit == kExitOk);
  CHECK(run({"--input", q, "report"}).exit == kExitOk);
  CHECK(run({"--help"}).exit == kExitOk);

  Run no_seed = run({"--input", q, "check", "nakayama"});
  CHECK(no_seed.exit == kExitInputError);
  CHECK(no_seed.err.find("--seed") != std::string::npos);
  CHECK(run({"--input", q, "check", "bogus", "--seed", "1"}).exit == kExitInputError);
  CHECK(run({"--input", q, "support", "nope"}).err == "error: unknown complex 'nope'\n");
  CHECK(run({"--input", q, "residue", "nope"}).exit == kExitInputError);
  CHECK(run({"--input", q, "koszul", "one", "x +"}).exit == kExitInputError);
  CHECK(run({"--input", q}).exit == kExitInputError);
  CHECK(run({"validate"}).exit == kExitInputError);
  CHECK(run({"--input", "/nonexistent.json", "validate"}).exit == kExitInputError);
  CHECK(run({"--input", q, "--format", "xml", "validate"}).exit == kExitInputError);
  CHECK(run({"--input", scratch("bad.json", "{"), "validate"}).exit == kExitInputError);
}

TEST_CASE("command outputs") {
  std::string q = data("qxy.json");
  Run s = run({"--input", q, "support", "kx"});
  CHECK(s.out == "{\"minimal\":[\"(x)\"]}\n");
  CHECK(s.err.empty());

  Run r = run({"--input", q, "residue", "pmax"});
  CHECK(r.out.find("\"rank\":1") != std::string::npos);
  CHECK(r.out.find("\"basis_degrees\":[0]") != std::string::npos);

  Run k = run({"--input", q, "koszul", "one", "x"});
  CHECK(k.out.find("\"support\":{\"minimal\":[\"(x)\"]}") != std::string::npos);

  Run c = run({"--input", q, "--format", "text", "classify"});
  CHECK(c.out.find("class 0  support (0)  objects one") == 0);
  CHECK(c.out.find("support (empty)  objects null") != std::string::npos);

  CHECK(run({"--input", scratch("empty.json", kMinimal), "report"}).out == "{}\n");
}

TEST_CASE("nakayama report matches golden files") {
  std::string q = data("qxy.json");
  std::vector<std::string> args = {"--input", q, "check", "nakayama", "--seed", "7", "--n", "50"};
  Run json = run(args);
  CHECK(json.exit == kExitOk);
  CHECK(json.out == slurp(std::string(THICKET_GOLDEN_DIR) + "/nakayama_seed7_n50.json"));
  args.insert(args.begin() + 2, {"--format", "text"});
  Run text = run(args);
  CHECK(text.out == slurp(std::string(THICKET_GOLDEN_DIR) + "/nakayama_seed7_n50.txt"));
  CHECK(run({"--input", q, "check", "nakayama", "--seed", "7", "--n", "50"}).out == json.out);
}

TEST_CASE("timing is opt-in") {
  std::string q = data("qxy.json");
  std::vector<std::string> args = {"--input", q, "check", "homotopy", "--seed", "2", "--n", "3"};
  CHECK(run(args).out.find("wall_seconds") == std::string::npos);
  args.push_back("--timing");
  CHECK(run(args).out.find("wall_seconds") != std::string::npos);
}

TEST_CASE("max-degree sets the probe window") {
  Run t = run({"--input", data("qxy.json"), "--max-degree", "3", "cohomology", "kx"});
  CHECK(t.exit == kExitOk);
  CHECK(t.out.find("\"window\":[-3,3]") != std::string::npos);
}
