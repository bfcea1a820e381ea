// End-to-end tests of the nsring binary: golden-file comparisons for every
// subcommand, exit-code mapping, and byte determinism across runs and worker
// counts. The binary path and the golden directory come in as compile
// definitions.

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "catch_amalgamated.hpp"
#include "json.hpp"
#include "nsring/nsring.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs the CLI through /bin/sh, capturing stdout. `prefix` may set
// environment variables; stderr is folded in only when asked.
RunResult run(const std::string& args, bool merge_stderr = false,
              const std::string& prefix = "") {
  const std::string cmd = prefix + std::string(NSRING_CLI_PATH) + " " + args +
                          (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buffer[4096];
  size_t n = 0;
  while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
    result.out.append(buffer, n);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string golden(const std::string& name) {
  const std::string path = std::string(NSRING_GOLDEN_DIR) + "/" + name;
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("analyze matches its golden output", "[cli]") {
  const struct {
    const char* args;
    const char* file;
  } cases[] = {
      {"analyze 3,4,5 --json", "analyze_3_4_5.json"},
      {"analyze 11,12,14,15 --json", "analyze_11_12_14_15.json"},
      {"analyze 4,7,9,10 --json", "analyze_4_7_9_10.json"},
      {"analyze 3 4 5", "analyze_3_4_5.txt"},
  };
  for (const auto& c : cases) {
    CAPTURE(c.args);
    const RunResult r = run(c.args);
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out == golden(c.file));
  }
  // Space- and comma-separated input agree.
  REQUIRE(run("analyze 11 12 14 15 --json").out ==
          golden("analyze_11_12_14_15.json"));
}

TEST_CASE("enumerate matches its golden output", "[cli]") {
  const RunResult table = run("enumerate --genus 3");
  REQUIRE(table.exit_code == 0);
  REQUIRE(table.out == golden("enumerate_genus3.txt"));

  const RunResult ndjson = run("enumerate --genus 4 --ndjson");
  REQUIRE(ndjson.exit_code == 0);
  REQUIRE(ndjson.out == golden("enumerate_genus4.ndjson"));

  // Every line is a standalone JSON record, sorted by (genus, generators).
  const auto lines = lines_of(ndjson.out);
  REQUIRE(lines.size() == 15);
  std::vector<std::pair<int64_t, std::vector<int64_t>>> order;
  for (const auto& line : lines) {
    const auto j = nsring::ordered_json::parse(line);
    order.emplace_back(j.at("invariants").at("genus").get<int64_t>(),
                       j.at("min_gens").get<std::vector<int64_t>>());
  }
  REQUIRE(std::is_sorted(order.begin(), order.end()));
}

TEST_CASE("verify and family match their golden outputs", "[cli]") {
  const RunResult verify = run("verify --genus 6");
  REQUIRE(verify.exit_code == 0);
  REQUIRE(verify.out == golden("verify_genus6.json"));

  const RunResult family = run("family pseudosym 1 2 3");
  REQUIRE(family.exit_code == 0);
  REQUIRE(family.out == golden("family_pseudosym_1_2_3.json"));

  const RunResult arith = run("family arith 7 1 1 3");
  REQUIRE(arith.exit_code == 0);
  REQUIRE(arith.out == golden("family_arith_7_1_1_3.json"));
}

TEST_CASE("filtered enumeration is re-checked against the library",
          "[cli][property]") {
  // Each record emitted by --filter teter really is Teter per the scan
  // decider, and the count matches the sweep tally.
  const RunResult r = run("enumerate --genus 6 --filter teter --ndjson");
  REQUIRE(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  for (const auto& line : lines) {
    const auto j = nsring::ordered_json::parse(line);
    const auto h = nsring::NumericalSemigroup::from_generators(
        j.at("min_gens").get<std::vector<int64_t>>());
    REQUIRE(nsring::teter_oracle(h).has_value());
  }
  nsring::SweepOptions o;
  o.g_max = 6;
  o.threads = 1;
  REQUIRE(static_cast<int64_t>(lines.size()) ==
          nsring::sweep(o).teter_total());
}

TEST_CASE("pseudo-symmetric count at genus 12 matches the sweep",
          "[cli][property]") {
  const RunResult r =
      run("enumerate --genus 12 --filter pseudo-symmetric --ndjson");
  REQUIRE(r.exit_code == 0);
  nsring::SweepOptions o;
  o.g_max = 12;
  o.threads = 1;
  const auto report = nsring::sweep(o);
  int64_t expected = 0;
  for (const auto& tally : report.by_genus) {
    expected += tally.pseudo_symmetric;
  }
  REQUIRE(static_cast<int64_t>(lines_of(r.out).size()) == expected);
}

TEST_CASE("output is deterministic across runs and worker counts", "[cli]") {
  const std::string a = run("analyze 4,7,9,10 --json").out;
  const std::string b = run("analyze 4,7,9,10 --json").out;
  REQUIRE(a == b);

  const std::string one =
      run("verify --genus 8", false, "NSRING_THREADS=1 ").out;
  const std::string four =
      run("verify --genus 8", false, "NSRING_THREADS=4 ").out;
  REQUIRE(one == four);
  REQUIRE_FALSE(one.empty());
}

TEST_CASE("exit codes follow the contract", "[cli]") {
  REQUIRE(run("verify --genus 5").exit_code == 0);           // ok
  REQUIRE(run("analyze 6 9 15").exit_code == 2);             // gcd 3
  REQUIRE(run("analyze 1,x").exit_code == 2);                // parse error
  REQUIRE(run("enumerate --genus 40").exit_code == 3);       // guard
  REQUIRE(run("verify --genus 99").exit_code == 3);          // guard
  REQUIRE(run("family pseudosym 1 1 1").exit_code == 2);     // collision
  REQUIRE(run("family arith 6 1 3 2").exit_code == 2);       // gcd(a, d)
  REQUIRE(run("family bogus 1 2 3").exit_code == 2);
  REQUIRE(run("enumerate --genus 3 --filter nope").exit_code == 2);
  REQUIRE(run("verify --genus 3 --suite nope").exit_code == 2);
  REQUIRE(run("").exit_code == 2);                           // no subcommand
  REQUIRE(run("--help").exit_code == 0);
  REQUIRE(run("verify --genus 3", false, "NSRING_THREADS=junk ").exit_code ==
          2);

  const RunResult err = run("analyze 6 9 15", /*merge_stderr=*/true);
  REQUIRE(err.out.find("gcd") != std::string::npos);
}

TEST_CASE("timing flag adds the one nondeterministic field", "[cli]") {
  const RunResult r = run("analyze 3,4,5 --json --timing");
  REQUIRE(r.exit_code == 0);
  const auto j = nsring::ordered_json::parse(r.out);
  REQUIRE(j.contains("timing_ms"));
  REQUIRE(j.at("timing_ms").is_number_integer());
  // ...and stays out of the default output.
  REQUIRE_FALSE(
      nsring::ordered_json::parse(run("analyze 3,4,5 --json").out)
          .contains("timing_ms"));
}
