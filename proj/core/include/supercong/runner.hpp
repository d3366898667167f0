#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "supercong/checkers.hpp"

namespace supercong {

// Exactly the primes in [pmin, pmax], ascending (segmented sieve).
std::vector<u64> sieve_primes(u64 pmin, u64 pmax);

struct ScanPlan {
  std::vector<std::string> ids;  // empty means the whole registry
  u64 pmin = 3;
  u64 pmax = 3;
  u32 jobs = 1;
  u64 seed = 0;
  std::optional<u32> sample;  // forces RANDOM(sample) when set
  std::string out_path;
  bool resume = false;
  std::string dump_eta;  // when set, writes <path>.a.csv and <path>.b.csv
  u64 qseries_n = 500;
};

// Dependency hook so tests can substitute a corrupted checker.
using CheckRunner =
    std::function<CheckOutcome(std::string_view id, u64 p, const CheckConfig&, const PrimeContext&)>;

// Runs the plan: one record per (prime, check) pair not already present when
// resuming, appended to out_path and finally rewritten in (p, check) order.
// Returns 0 when no record fails, 1 when one does, 2 on usage/IO errors
// (diagnostics on `log`).
int execute(const ScanPlan& plan, std::ostream& log);
int execute(const ScanPlan& plan, std::ostream& log, const CheckRunner& runner);

// Per-check holds/fails/skipped table plus every failing record verbatim.
// Exit codes as for execute; malformed input reports the line number.
int report(std::istream& in, std::ostream& out, std::ostream& log);
int report_file(const std::string& in_path, std::ostream& out, std::ostream& log);

// Frozen example table (values derived independently of the implementation).
int selftest(std::ostream& out);

// Canonical wire form (one JSON object, no trailing whitespace, no newline).
std::string to_json_line(const CheckOutcome& outcome);

}  // namespace supercong
