// Black-box tests for the pqvol binary (path injected by the build).

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::string& args) {
  const std::string err_file = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                               "/pqvol_cli_stderr.txt";
  const std::string command = std::string(PQVOL_CLI_PATH) + " " + args + " 2>" + err_file;
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.out.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream err(err_file);
  std::stringstream ss;
  ss << err.rdbuf();
  result.err = ss.str();
  return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("hstar with all methods cross-verifies W4") {
  RunResult r = run_cli("hstar W4 --method all");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "volume:    66"));
  CHECK(contains(r.out, "agreement: yes"));
  CHECK(contains(r.out, "interior"));
  CHECK(contains(r.out, "pms"));
  CHECK(contains(r.out, "formula"));
  CHECK(contains(r.out, "oracle"));
}

TEST_CASE("hstar formula on a star") {
  RunResult r = run_cli("hstar KP:1,3 --method formula --json");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\"volume\":\"8\""));
  CHECK(contains(r.out, "\"methods\":[\"formula\"]"));
}

TEST_CASE("pms method on a cone-presented join") {
  RunResult r = run_cli("hstar 'J:(C4,K1)' --method pms --json");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\"volume\":\"66\""));
  CHECK(contains(r.out, "\"spec\":\"J:(C4,K1)\""));
}

TEST_CASE("interior method rejects a disconnected double") {
  RunResult r = run_cli("hstar E2 --method interior");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.err, "error:"));
  CHECK(contains(r.err, "disconnected"));
}

TEST_CASE("parse errors name the offending token and exit nonzero") {
  RunResult r = run_cli("hstar X9");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.err, "error:"));
  CHECK(contains(r.err, "X9"));
}

TEST_CASE("inapplicable method is an error") {
  RunResult r = run_cli("hstar C4 --method pms");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.err, "error:"));
  CHECK(contains(r.err, "not applicable"));
}

TEST_CASE("structured output is byte-stable") {
  RunResult a = run_cli("hstar W5 --method formula --json");
  RunResult b = run_cli("hstar W5 --method formula --json");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(contains(a.out, "\"volume\":\"212\""));
}

TEST_CASE("structured output schema is frozen") {
  RunResult r = run_cli("hstar W3 --method all --json");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "{\"spec\":\"W3\",\"vertices\":4,\"edges\":6,\"dimension\":6,"
        "\"methods\":[\"interior\",\"pms\",\"formula\",\"oracle\"],"
        "\"hstar\":[\"1\",\"9\",\"9\",\"1\"],\"degree\":3,\"volume\":\"20\","
        "\"agreement\":true}\n");
}

TEST_CASE("degenerate and oversized specs are rejected") {
  RunResult empty = run_cli("hstar K0");
  CHECK(empty.exit_code == 1);
  CHECK(contains(empty.err, "empty graph"));

  RunResult huge = run_cli("hstar W200 --method formula");
  CHECK(huge.exit_code == 1);
  CHECK(contains(huge.err, "report guard"));
}

TEST_CASE("thread count does not change oracle output") {
  RunResult serial = run_cli("hstar C4 --method oracle --json --threads 1");
  RunResult parallel = run_cli("hstar C4 --method oracle --json --threads 2");
  CHECK(serial.exit_code == 0);
  CHECK(serial.out == parallel.out);
}

TEST_CASE("batch mode emits one document per line") {
  const std::string batch = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                            "/pqvol_batch_specs.txt";
  {
    std::ofstream f(batch);
    f << "K3\nW3\n# comment\nKP:2,2\n";
  }
  RunResult r = run_cli("hstar --file " + batch + " --method formula --json");
  CHECK(r.exit_code == 0);
  int lines = 0;
  std::stringstream ss(r.out);
  std::string line;
  while (std::getline(ss, line))
    if (!line.empty()) ++lines;
  CHECK(lines == 3);
  CHECK(contains(r.out, "\"spec\":\"K3\""));
  CHECK(contains(r.out, "\"spec\":\"KP:2,2\""));
}

TEST_CASE("batch mode reports per-line failures and keeps going") {
  const std::string batch = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                            "/pqvol_batch_bad.txt";
  {
    std::ofstream f(batch);
    f << "K3\nBOGUS\nK4\n";
  }
  RunResult r = run_cli("hstar --file " + batch + " --method formula --json");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.err, "BOGUS"));
  CHECK(contains(r.out, "\"spec\":\"K4\""));
}

TEST_CASE("explicit oracle request beyond the guard fails fast") {
  RunResult r = run_cli("hstar W6 --method oracle");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.err, "error:"));
  CHECK(contains(r.err, "guard"));
}

TEST_CASE("interior subcommand") {
  RunResult r = run_cli("interior D:K3 --json");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\"interior\":[\"1\",\"4\",\"1\"]"));
  CHECK(contains(r.out, "\"hypertrees\":\"6\""));

  // C_4 = K_{2,2}, whose h* has value 16 at 1.
  RunResult c4 = run_cli("interior D:C4");
  CHECK(c4.exit_code == 0);
  CHECK(contains(c4.out, "hypertrees: 16"));

  // Bipartite specs accept any nested graph spec after D:.
  RunResult nested = run_cli("interior 'D:J:(C4,K1)' --json");
  CHECK(nested.exit_code == 0);
  CHECK(contains(nested.out, "\"hypertrees\":\"66\""));

  RunResult single = run_cli("interior 'EL2:p=1,q=1;1-1'");
  CHECK(single.exit_code == 0);
  CHECK(contains(single.out, "hypertrees: 1"));

  RunResult bad = run_cli("interior D:E2");
  CHECK(bad.exit_code == 1);
  CHECK(contains(bad.err, "error:"));
}

TEST_CASE("verify corpora") {
  RunResult wheels = run_cli("verify wheels --max-n 5");
  CHECK(wheels.exit_code == 0);
  CHECK(contains(wheels.out, "pass"));
  CHECK(contains(wheels.out, "W5"));
  CHECK(contains(wheels.out, "all checks passed"));

  RunResult joins = run_cli("verify joins --max-m 5");
  CHECK(joins.exit_code == 0);
  CHECK(contains(joins.out, "all checks passed"));

  RunResult oracle = run_cli("verify oracle --max-n 3");
  CHECK(oracle.exit_code == 0);
  CHECK(contains(oracle.out, "graphs agree"));
}
