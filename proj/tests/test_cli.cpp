/* test_cli.cpp -- black-box tests driving the sftalg binary. */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args) {
  RunResult r;
  std::string cmd = std::string(SFTALG_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture(const std::string& name, const std::string& body) {
  std::string path = std::string(SFTALG_TMP_DIR) + "/" + name;
  std::ofstream out(path);
  REQUIRE(out.good());
  out << body;
  return path;
}

std::string gm_spec() {
  return fixture("cli_gm.json", R"({"alphabet": ["0", "1"], "forbidden": ["11"]})");
}

std::string f10_spec() {
  return fixture("cli_f10.json", R"({"alphabet": ["0", "1"], "forbidden": ["10"]})");
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("version flag") {
  RunResult r = run_cli("--version");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "0.1.0"));
}

TEST_CASE("info") {
  RunResult r = run_cli("info " + gm_spec());
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "alphabet: 0 1"));
  CHECK(contains(r.output, "forbidden: 11"));
  CHECK(contains(r.output, "memory: 1"));
  CHECK(contains(r.output, "states (length-1 words): 0 1"));
}

TEST_CASE("language listing") {
  RunResult r = run_cli("language " + gm_spec() + " -n 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "00\n01\n10\n");
  CHECK(run_cli("language " + gm_spec() + " -n 0").output == "w\n");
}

TEST_CASE("clopen canonicalization") {
  RunResult r = run_cli("clopen " + gm_spec() + " 'C(1,0)'");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "canonical: Z(00)"));
  CHECK(contains(r.output, "level: 2, cylinders: 1"));
  CHECK(contains(run_cli("clopen " + gm_spec() + " 'Z(0)|Z(1)'").output, "canonical: X"));
}

TEST_CASE("eval") {
  RunResult r = run_cli("eval " + gm_spec() + " 's(0)*st(1)'");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "1*1_{Z(00)} d_{01'}\n");
  CHECK(run_cli("eval " + gm_spec() + " 'st(0)*s(1)'").output == "0\n");
  RunResult m = run_cli("eval " + gm_spec() + " '7*1' --ring Zn:5");
  CHECK(m.exit_code == 0);
  CHECK(m.output == "2*1_{X} d_{e}\n");
}

TEST_CASE("cost") {
  RunResult r = run_cli("cost " + gm_spec() + " --B 1 --point '1|0'");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "cost: 1\n");
  CHECK(run_cli("cost " + f10_spec() + " --B 1 --point '|0'").output == "cost: infinite\n");
}

TEST_CASE("orbit") {
  RunResult r = run_cli("orbit " + gm_spec() + " --point '|0' --depth 1");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "|0\n"));
  CHECK(contains(r.output, "1|0"));
}

TEST_CASE("check suites") {
  RunResult r = run_cli("check " + gm_spec() + " --max-len 2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "partial representation axioms: checked"));
  CHECK(contains(r.output, "failed 0"));
}

TEST_CASE("simplicity exit codes") {
  RunResult good = run_cli("simplicity " + gm_spec() + " --ring Q");
  CHECK(good.exit_code == 0);
  CHECK(contains(good.output, "simplicity: holds"));

  RunResult bad = run_cli("simplicity " + f10_spec() + " --ring Q");
  CHECK(bad.exit_code == 1);
  CHECK(contains(bad.output, "simplicity: fails"));
  CHECK(contains(bad.output, "witness"));

  RunResult with_oracle = run_cli("simplicity " + gm_spec() + " --ring Q --oracle-bound 3");
  CHECK(with_oracle.exit_code == 0);
  CHECK(contains(with_oracle.output, "(oracle, bound 3)"));
}

TEST_CASE("error reporting") {
  RunResult syn = run_cli("eval " + gm_spec() + " 's('");
  CHECK(syn.exit_code == 2);
  CHECK(contains(syn.output, "error [SyntaxError]:"));
  CHECK(contains(syn.output, "at offset 2"));

  std::string bad = fixture("cli_bad.json", R"({"alphabet": []})");
  RunResult mal = run_cli("info " + bad);
  CHECK(mal.exit_code == 2);
  CHECK(contains(mal.output, "error [MalformedSpec]:"));

  std::string unk = fixture("cli_unk.json", R"({"alphabet": ["0"], "forbidden": ["1"]})");
  RunResult mal2 = run_cli("info " + unk);
  CHECK(mal2.exit_code == 2);
  CHECK(contains(mal2.output, "error [MalformedSpec]:"));

  RunResult io = run_cli("info " + std::string(SFTALG_TMP_DIR) + "/does_not_exist.json");
  CHECK(io.exit_code == 2);
  CHECK(contains(io.output, "error [IoError]:"));

  RunResult ring = run_cli("simplicity " + gm_spec() + " --ring Z");
  CHECK(ring.exit_code == 2);
  CHECK(contains(ring.output, "error [SyntaxError]:"));
}

TEST_CASE("json reports are deterministic and well formed") {
  std::string args = "language " + gm_spec() + " -n 2 --json";
  RunResult a = run_cli(args);
  RunResult b = run_cli(args);
  CHECK(a.exit_code == 0);

  auto strip_timing = [](const std::string& text) {
    std::string out;
    std::size_t start = 0;
    while (start < text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string::npos) end = text.size();
      std::string line = text.substr(start, end - start);
      if (line.find("\"timing_ms\"") == std::string::npos) out += line + "\n";
      start = end + 1;
    }
    return out;
  };
  CHECK(strip_timing(a.output) == strip_timing(b.output));

  nlohmann::json j = nlohmann::json::parse(a.output);
  CHECK(j["verb"] == "language");
  CHECK(j["version"] == "0.1.0");
  CHECK(j["inputs"]["n"] == 2);
  CHECK(j["result"]["words"] == nlohmann::json::array({"00", "01", "10"}));
  CHECK(j.contains("timing_ms"));

  nlohmann::json v = nlohmann::json::parse(
      run_cli("simplicity " + f10_spec() + " --ring Q --oracle-bound 3 --json").output);
  CHECK(v["result"]["verdict"]["holds"] == false);
  CHECK(v["result"]["verdict"]["witness"].is_object());
  CHECK(v["result"]["oracles"].size() == 2);
}
