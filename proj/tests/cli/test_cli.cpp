#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"

namespace {

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  Result r;
  r.code = sqe::cli::run(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string golden(const std::string& name) {
  std::ifstream f(std::string(SQENERGY_GOLDEN_DIR) + "/" + name);
  REQUIRE_MESSAGE(f, "missing golden file " << name);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

void check_golden(const std::vector<std::string>& args, const std::string& file, const std::string& input = "") {
  const auto r = run(args, input);
  CHECK(r.code == 0);
  CHECK(r.out == golden(file));
}

}  // namespace

TEST_CASE("golden outputs") {
  check_golden({"energies", "--g6", "Bw"}, "energies_triangle.csv");
  check_golden({"energies"}, "energies_stdin.csv", "Bw\nC~\nDQo\nDhc\nE?~o\n");
  check_golden({"energies", "--json"}, "energies_json.jsonl", "Bw\nDhc\n");
  check_golden({"scan", "--n", "5", "--table1"}, "scan_n5_table1.csv");
  check_golden({"scan", "--n", "4"}, "scan_n4.csv");
  check_golden({"unicyclic-min", "--n", "10"}, "unicyclic_min_n10.csv");
  check_golden({"m0-curve", "--from", "98", "--to", "100"}, "m0_curve.csv");
  check_golden({"certify", "--g6", "Bw"}, "certify_triangle.csv");
  check_golden({"certify", "--g6", "Dhc", "--json"}, "certify_c5.jsonl");
  check_golden({"family", "extended_barbell", "--k", "3"}, "family_xbarbell3.txt");
  check_golden({"leaf-profile", "--g6", "Dhc"}, "leaf_profile_c5.csv");
  check_golden({"quotient", "--g6", "Ds_", "--partition", "0;1,2,3,4"}, "quotient_star.csv");
}

TEST_CASE("scan input can be piped") {
  // Feed the enumerated graphs back in through standard input.
  const auto records = run({"scan", "--n", "5", "--json", "--records"});
  REQUIRE(records.code == 0);
  std::string g6s;
  const std::string key = "\"graph6\":\"";
  for (auto pos = records.out.find(key); pos != std::string::npos; pos = records.out.find(key, pos + 1)) {
    const auto start = pos + key.size();
    g6s += records.out.substr(start, records.out.find('"', start) - start) + "\n";
  }
  const auto piped = run({"scan", "--table1"}, g6s);
  CHECK(piped.code == 0);
  CHECK(piped.out == golden("scan_n5_table1.csv"));
}

TEST_CASE("thread count does not change output") {
  const auto one = run({"--threads", "1", "scan", "--n", "6", "--json", "--records"});
  const auto four = run({"--threads", "4", "scan", "--n", "6", "--json", "--records"});
  CHECK(one.code == 0);
  CHECK(one.out == four.out);
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"energies", "--g6", "Bw", "--input", "x.g6"}).code == 2);
  CHECK(run({"scan", "--n", "11"}).code == 2);
  CHECK(run({"scan", "--n", "5", "--g6", "Bw"}).code == 2);
  CHECK(run({"unicyclic-min", "--n", "15"}).code == 2);
  CHECK(run({"certify", "--rule", "nope", "--g6", "Bw"}).code == 2);
  CHECK(run({"certify", "--factor1", "Bw", "--g6", "Bw"}).code == 2);
  CHECK(run({"family", "petersen"}).code == 2);
  CHECK(run({"quotient", "--g6", "Bw", "--twins", "--partition", "0;1,2"}).code == 2);
  CHECK(run({"scan", "--n", "4", "--records"}).code == 2);
  const auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("energies") != std::string::npos);
}

TEST_CASE("computation errors exit with status 1") {
  const auto bad = run({"energies"}, "Bw\nC~\nbad!\n");
  CHECK(bad.code == 1);
  CHECK(bad.err.find("line 3") != std::string::npos);
  CHECK(bad.out.find("C~,4,6") != std::string::npos);
  CHECK(run({"energies", "--input", "/nonexistent/graphs.g6"}).code == 1);
  CHECK(run({"leaf-profile", "--g6", "B?"}).code == 1);
  CHECK(run({"family", "cycle", "--n", "2"}).code == 1);
  CHECK(run({"quotient", "--g6", "Bw", "--partition", "0;1"}).code == 1);
  CHECK(run({"unicyclic-min"}, "C~\n").code == 1);
}

TEST_CASE("certify extras") {
  const auto kron = run({"certify", "--g6", "Bw", "--rule", "kronecker"});
  CHECK(kron.code == 0);
  CHECK(kron.out.find("Bw,verdict,none") != std::string::npos);

  const auto cov = run({"certify", "--coverage"}, "Bw\nC~\nDhc\n");
  CHECK(cov.code == 0);
  CHECK(cov.out.find("# graphs=3") != std::string::npos);
  CHECK(cov.out.find("unsound=0") != std::string::npos);

  const auto all = run({"certify", "--all", "--g6", "Dhc"});
  CHECK(all.out.find("inconclusive") != std::string::npos);
}

TEST_CASE("output file") {
  const auto path = std::filesystem::temp_directory_path() / "sqenergy_cli_test.csv";
  const auto r = run({"--output", path.string(), "energies", "--g6", "Bw"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::ostringstream s;
  s << f.rdbuf();
  CHECK(s.str() == golden("energies_triangle.csv"));
  std::filesystem::remove(path);
}
