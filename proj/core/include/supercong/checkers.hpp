#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "supercong/modmath.hpp"

namespace supercong {

enum class CheckStatus { Holds, Fails, Skipped };

// Verdict record for one (check, prime) evaluation; the unit of persistence.
struct CheckOutcome {
  std::string check;
  u64 p = 0;
  CheckStatus status = CheckStatus::Skipped;
  std::string reason;  // set iff Skipped
  std::string lhs;
  std::string rhs;
  std::string modulus;  // "p" | "p2" | "p4" | "exact"
  std::vector<std::pair<std::string, i64>> witness;
  double elapsed_ms = 0.0;
};

// Sampling policy for universally quantified variables (x, t, r).
// Auto follows the documented per-check defaults: exhaustive below a
// per-check threshold, `count` pseudorandom samples above it.
struct SamplePolicy {
  enum class Mode { Auto, All, Random };
  Mode mode = Mode::Auto;
  u32 count = 32;
};

struct CheckConfig {
  SamplePolicy x_sample{};
  u64 seed = 0;
  u64 qseries_n = 500;       // E2.2/E2.3 run only for p <= qseries_n
  u64 p4_limit = u64(1) << 15;  // L2.2 runs only for p below this
};

struct CheckInfo {
  std::string_view id;
  std::string_view statement;
  std::string_view modulus;
  std::string_view hypotheses;
};

// Registry in statement order; stable across runs.
const std::vector<CheckInfo>& list_checks();

bool is_check_id(std::string_view id);
// CJ* and ZW* entries are numerically tested conjectures, not proved results.
bool is_conjecture_id(std::string_view id);

// Evaluates one check at one prime.  p must be an odd prime (primality is
// the caller's responsibility).  The context overload requires ctx.p() == p
// and tables covering 6(p-1).
CheckOutcome run_check(std::string_view id, u64 p, const CheckConfig& cfg);
CheckOutcome run_check(std::string_view id, u64 p, const CheckConfig& cfg, const PrimeContext& ctx);

// One outcome per registry id, in registry order.
std::vector<CheckOutcome> run_all(u64 p, const CheckConfig& cfg);

}  // namespace supercong
