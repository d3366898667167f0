// Command-line front end: check catalog, single evaluations, batch scans
// over prime ranges with JSONL persistence, result reports and a selftest.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "supercong/runner.hpp"

namespace {

using supercong::u64;

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::string> split_ids(const std::string& spec) {
  std::vector<std::string> ids;
  if (spec == "all") return ids;  // empty list = whole registry
  std::stringstream ss(spec);
  std::string id;
  while (std::getline(ss, id, ',')) {
    if (!id.empty()) ids.push_back(id);
  }
  return ids;
}

// Optional key=value config file named by SUPERCONG_CONFIG; CLI flags win.
std::map<std::string, std::string> load_config(std::ostream& log, bool& bad) {
  std::map<std::string, std::string> kv;
  const char* path = std::getenv("SUPERCONG_CONFIG");
  if (!path) return kv;
  std::ifstream in(path);
  if (!in) {
    log << "error: cannot open config file " << path << "\n";
    bad = true;
    return kv;
  }
  static const std::set<std::string> known = {"ids",  "pmin",   "pmax", "out",      "jobs", "seed",
                                              "sample", "resume", "in",   "dump-eta", "id",   "p",
                                              "qseries-n"};
  std::string line;
  u64 line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      log << "error: " << path << " line " << line_no << ": expected key=value\n";
      bad = true;
      return kv;
    }
    const std::string key = line.substr(0, eq);
    if (!known.count(key)) {
      log << "error: " << path << " line " << line_no << ": unknown key '" << key << "'\n";
      bad = true;
      return kv;
    }
    kv[key] = line.substr(eq + 1);
  }
  return kv;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"supercong: batch verification of Legendre-polynomial supercongruences"};
  app.require_subcommand(1);

  auto* list_cmd = app.add_subcommand("list", "print the check catalog");

  std::string check_id;
  u64 check_p = 0;
  auto* check_cmd = app.add_subcommand("check", "evaluate one check at one prime");
  check_cmd->add_option("--id", check_id, "check id (see `list`)");
  check_cmd->add_option("--p", check_p, "odd prime");

  std::string ids_spec = "all";
  u64 pmin = 0, pmax = 0, seed = 0, qseries_n = 500;
  unsigned jobs = 1, sample = 0;
  std::string out_path, dump_eta;
  bool resume = false;
  auto* scan_cmd = app.add_subcommand("scan", "evaluate checks over a prime range");
  scan_cmd->add_option("--ids", ids_spec, "comma-separated ids or 'all'");
  scan_cmd->add_option("--pmin", pmin, "lower prime bound (inclusive)");
  scan_cmd->add_option("--pmax", pmax, "upper prime bound (inclusive)");
  scan_cmd->add_option("--out", out_path, "JSONL output path");
  scan_cmd->add_option("--jobs", jobs, "worker count");
  scan_cmd->add_option("--seed", seed, "sampling seed");
  scan_cmd->add_option("--sample", sample, "force RANDOM(n) sampling");
  scan_cmd->add_option("--qseries-n", qseries_n, "eta-expansion truncation");
  scan_cmd->add_option("--dump-eta", dump_eta, "write eta coefficient CSVs to <path>.a.csv/.b.csv");
  scan_cmd->add_flag("--resume", resume, "skip (p, check) pairs already in --out");

  std::string report_in;
  auto* report_cmd = app.add_subcommand("report", "summarize a JSONL result file");
  report_cmd->add_option("--in", report_in, "JSONL input path");

  auto* selftest_cmd = app.add_subcommand("selftest", "run the frozen example table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  bool bad_config = false;
  const auto config = load_config(std::cerr, bad_config);
  if (bad_config) return 2;
  auto fill = [&](const CLI::Option* opt, const char* key, auto& target) {
    auto it = config.find(key);
    if (it == config.end() || (opt && opt->count() > 0)) return;
    std::stringstream ss(it->second);
    ss >> target;
  };

  try {
    if (list_cmd->parsed()) {
      std::printf("%-8s %-46s %-6s %s\n", "id", "statement", "mod", "hypotheses");
      for (const auto& info : supercong::list_checks())
        std::printf("%-8s %-46s %-6s %s\n", std::string(info.id).c_str(),
                    std::string(info.statement).c_str(), std::string(info.modulus).c_str(),
                    std::string(info.hypotheses).c_str());
      return 0;
    }

    if (check_cmd->parsed()) {
      fill(check_cmd->get_option("--id"), "id", check_id);
      fill(check_cmd->get_option("--p"), "p", check_p);
      if (check_id.empty() || check_p == 0) {
        std::cerr << "error: check requires --id and --p\n";
        return 2;
      }
      if (!supercong::is_check_id(check_id)) {
        std::cerr << "error: unknown check id: " << check_id << "\n";
        return 2;
      }
      if (check_p < 3 || !is_prime_u64(check_p)) {
        std::cerr << "error: --p must be an odd prime\n";
        return 2;
      }
      supercong::CheckConfig cfg;
      cfg.seed = seed;
      const supercong::CheckOutcome outcome = supercong::run_check(check_id, check_p, cfg);
      std::cout << supercong::to_json_line(outcome) << "\n";
      std::cerr << "elapsed: " << outcome.elapsed_ms << " ms\n";
      return outcome.status == supercong::CheckStatus::Fails ? 1 : 0;
    }

    if (scan_cmd->parsed()) {
      std::string resume_str;
      fill(scan_cmd->get_option("--ids"), "ids", ids_spec);
      fill(scan_cmd->get_option("--pmin"), "pmin", pmin);
      fill(scan_cmd->get_option("--pmax"), "pmax", pmax);
      fill(scan_cmd->get_option("--out"), "out", out_path);
      fill(scan_cmd->get_option("--jobs"), "jobs", jobs);
      fill(scan_cmd->get_option("--seed"), "seed", seed);
      fill(scan_cmd->get_option("--sample"), "sample", sample);
      fill(scan_cmd->get_option("--qseries-n"), "qseries-n", qseries_n);
      fill(scan_cmd->get_option("--dump-eta"), "dump-eta", dump_eta);
      fill(scan_cmd->get_option("--resume"), "resume", resume_str);
      if (resume_str == "1" || resume_str == "true") resume = true;

      supercong::ScanPlan plan;
      plan.ids = split_ids(ids_spec);
      plan.pmin = pmin;
      plan.pmax = pmax;
      plan.jobs = jobs;
      plan.seed = seed;
      if (sample > 0) plan.sample = sample;
      plan.out_path = out_path;
      plan.resume = resume;
      plan.dump_eta = dump_eta;
      plan.qseries_n = qseries_n;
      return supercong::execute(plan, std::cerr);
    }

    if (report_cmd->parsed()) {
      fill(report_cmd->get_option("--in"), "in", report_in);
      if (report_in.empty()) {
        std::cerr << "error: report requires --in\n";
        return 2;
      }
      return supercong::report_file(report_in, std::cout, std::cerr);
    }

    if (selftest_cmd->parsed()) return supercong::selftest(std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
