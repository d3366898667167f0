#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "oracles.hpp"
#include "supercong/runner.hpp"

using namespace supercong;

namespace {

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

struct TempFile {
  std::string path;
  explicit TempFile(std::string p) : path(std::move(p)) { std::remove(path.c_str()); }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("sieve_primes examples") {
  CHECK(sieve_primes(3, 20) == std::vector<u64>{3, 5, 7, 11, 13, 17, 19});
  CHECK(sieve_primes(24, 28).empty());
  CHECK(sieve_primes(9973, 9973) == std::vector<u64>{9973});
  CHECK(sieve_primes(2, 2) == std::vector<u64>{2});
  CHECK_THROWS_AS(sieve_primes(3, u64(1) << 31), std::invalid_argument);
}

TEST_CASE("sieve matches trial division on a window") {
  auto primes = sieve_primes(100000, 101000);
  std::set<u64> got(primes.begin(), primes.end());
  for (u64 n = 100000; n <= 101000; ++n) {
    bool prime = n > 1;
    for (u64 d = 2; d * d <= n; ++d)
      if (n % d == 0) {
        prime = false;
        break;
      }
    CHECK(got.count(n) == (prime ? 1 : 0));
  }
}

TEST_CASE("scan produces one sorted record per (p, check) and exit 0") {
  TempFile file("runner_scan_test.jsonl");
  ScanPlan plan;
  plan.ids = {"E1.1"};
  plan.pmin = 3;
  plan.pmax = 100;
  plan.out_path = file.path;
  std::ostringstream log;
  CHECK(execute(plan, log) == 0);

  const auto lines = read_lines(file.path);
  CHECK(lines.size() == 24);  // odd primes 3..97
  u64 prev_p = 0;
  for (const std::string& line : lines) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j.at("check") == "E1.1");
    CHECK(j.at("status") == "holds");
    const u64 p = j.at("p").get<u64>();
    CHECK(p >= prev_p);
    prev_p = p;
  }
}

TEST_CASE("wire records carry exactly the documented keys") {
  TempFile file("runner_schema_test.jsonl");
  ScanPlan plan;
  plan.ids = {"E1.1", "T2.2", "T2.9", "E2.2", "K2.8", "CJ2.1", "L2.2"};
  plan.pmin = 3;
  plan.pmax = 30;
  plan.out_path = file.path;
  std::ostringstream log;
  CHECK(execute(plan, log) == 0);

  u64 kelisky_records = 0;
  std::pair<u64, std::string> prev_key{0, ""};
  for (const std::string& line : read_lines(file.path)) {
    CHECK(!line.empty());
    CHECK(line.back() != ' ');
    const auto j = nlohmann::json::parse(line);
    std::set<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.insert(it.key());
    std::set<std::string> expect = {"check", "p", "status", "lhs", "rhs", "modulus", "ms"};
    if (j.at("status") == "skipped") expect.insert("reason");
    if (j.contains("witness")) {
      expect.insert("witness");
      for (const auto& [k, v] : j.at("witness").items()) CHECK(v.is_number_integer());
    }
    CHECK(keys == expect);
    CHECK(j.at("ms").is_number());
    if (j.at("check") == "K2.8") {
      ++kelisky_records;
      CHECK(j.at("p") == 0);
      CHECK(j.at("modulus") == "exact");
    }
    std::pair<u64, std::string> key{j.at("p").get<u64>(), j.at("check").get<std::string>()};
    CHECK(prev_key < key);  // strict: sorted and no duplicates
    prev_key = key;
  }
  CHECK(kelisky_records == 1);
}

TEST_CASE("resume re-evaluates nothing on a complete file") {
  TempFile file("runner_resume_test.jsonl");
  ScanPlan plan;
  plan.ids = {"E1.1", "C2.2"};
  plan.pmin = 3;
  plan.pmax = 60;
  plan.out_path = file.path;
  std::ostringstream log1;
  CHECK(execute(plan, log1) == 0);
  const auto before = read_lines(file.path);

  plan.resume = true;
  std::ostringstream log2;
  CHECK(execute(plan, log2) == 0);
  CHECK(read_lines(file.path) == before);
  CHECK(log2.str().find("0 new evaluations") != std::string::npos);

  // widening the range back-fills exactly the missing primes
  plan.pmax = 100;
  std::ostringstream log3;
  CHECK(execute(plan, log3) == 0);
  const auto after = read_lines(file.path);
  CHECK(after.size() == 2 * 24);
  std::set<std::string> unique(after.begin(), after.end());
  CHECK(unique.size() == after.size());
}

TEST_CASE("a corrupted checker propagates exit 1") {
  TempFile file("runner_corrupt_test.jsonl");
  ScanPlan plan;
  plan.ids = {"CJ2.1", "CJ2.2"};
  plan.pmin = 5;
  plan.pmax = 30;
  plan.out_path = file.path;
  std::ostringstream log;
  const CheckRunner corrupted = [](std::string_view id, u64 p, const CheckConfig& cfg,
                                   const PrimeContext& ctx) {
    CheckOutcome out = run_check(id, p, cfg, ctx);
    if (out.status == CheckStatus::Holds && out.check == "CJ2.2") {
      out.status = CheckStatus::Fails;
      out.rhs = "0";
    }
    return out;
  };
  CHECK(execute(plan, log, corrupted) == 1);
  int fails = 0;
  for (const std::string& line : read_lines(file.path))
    if (nlohmann::json::parse(line).at("status") == "fails") ++fails;
  CHECK(fails > 0);
}

TEST_CASE("execute rejects bad plans with exit 2") {
  std::ostringstream log;
  ScanPlan plan;
  plan.out_path = "x.jsonl";
  plan.pmin = 2;
  plan.pmax = 10;
  CHECK(execute(plan, log) == 2);
  plan.pmin = 11;
  CHECK(execute(plan, log) == 2);
  plan.pmin = 3;
  plan.ids = {"NOPE"};
  CHECK(execute(plan, log) == 2);
  plan.ids.clear();
  plan.jobs = 0;
  CHECK(execute(plan, log) == 2);
  plan.jobs = 1;
  plan.out_path.clear();
  CHECK(execute(plan, log) == 2);
}

TEST_CASE("report aggregates, echoes fails verbatim, flags malformed lines") {
  const std::string holds =
      R"({"check":"E1.1","p":5,"status":"holds","lhs":"1","rhs":"1","modulus":"p2","ms":0})";
  const std::string fails =
      R"({"check":"CJ2.2","p":7,"status":"fails","lhs":"3","rhs":"4","modulus":"p2","ms":0})";
  const std::string skipped =
      R"({"check":"T2.9","p":7,"status":"skipped","reason":"requires p mod 4 == 1","lhs":"","rhs":"","modulus":"p2","ms":0})";

  SUBCASE("counts and order") {
    std::stringstream in(holds + "\n" + holds + "\n" + skipped + "\n");
    std::ostringstream out, log;
    CHECK(report(in, out, log) == 0);
    CHECK(out.str().find("E1.1      2      0      0") != std::string::npos);
    CHECK(out.str().find("T2.9      0      0      1") != std::string::npos);
  }
  SUBCASE("fails echoed and exit 1") {
    std::stringstream in(holds + "\n" + fails + "\n");
    std::ostringstream out, log;
    CHECK(report(in, out, log) == 1);
    CHECK(out.str().find(fails) != std::string::npos);
  }
  SUBCASE("empty input is an empty table with exit 0") {
    std::stringstream in("");
    std::ostringstream out, log;
    CHECK(report(in, out, log) == 0);
    CHECK(out.str().find("total: 0 records") != std::string::npos);
  }
  SUBCASE("malformed line reports its number with exit 2") {
    std::stringstream in(holds + "\nnot json\n");
    std::ostringstream out, log;
    CHECK(report(in, out, log) == 2);
    CHECK(log.str().find("line 2") != std::string::npos);
  }
  SUBCASE("missing keys are malformed") {
    std::stringstream in(R"({"check":"E1.1","p":5,"status":"holds"})" "\n");
    std::ostringstream out, log;
    CHECK(report(in, out, log) == 2);
    CHECK(log.str().find("line 1") != std::string::npos);
  }
}

TEST_CASE("selftest passes") {
  std::ostringstream out;
  CHECK(selftest(out) == 0);
  CHECK(out.str().find("selftest passed") != std::string::npos);
}
