#include "supercong/checkers.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <chrono>
#include <map>
#include <mutex>

#include "supercong/curve_count.hpp"
#include "supercong/legendre_poly.hpp"
#include "supercong/qseries.hpp"
#include "supercong/quadforms.hpp"
#include "supercong/series_sums.hpp"

namespace supercong {

namespace {

// ---------------------------------------------------------------------------
// Deterministic sampling

struct SplitMix64 {
  u64 state;
  u64 next() {
    u64 z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // uniform in [0, bound)
  u64 below(u64 bound) { return next() % bound; }
};

u64 derive_seed(u64 seed, std::string_view id, u64 p) {
  u64 h = 0xcbf29ce484222325ULL ^ seed;
  for (char c : id) h = (h ^ static_cast<unsigned char>(c)) * 0x100000001b3ULL;
  h ^= p + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

// Values of a quantified variable in [lo, p), skipping `skip`.  Exhaustive
// below the threshold (or when forced), `count` draws otherwise.
std::vector<u64> sample_values(u64 p, u64 lo, const std::vector<u64>& skip, u64 all_threshold,
                               const CheckConfig& cfg, SplitMix64& rng) {
  const SamplePolicy& pol = cfg.x_sample;
  const bool all = pol.mode == SamplePolicy::Mode::All ||
                   (pol.mode == SamplePolicy::Mode::Auto && p < all_threshold);
  std::vector<u64> out;
  auto skipped = [&](u64 v) { return std::find(skip.begin(), skip.end(), v) != skip.end(); };
  if (all) {
    for (u64 v = lo; v < p; ++v)
      if (!skipped(v)) out.push_back(v);
    return out;
  }
  const u64 range = p - lo;
  for (u32 i = 0; i < pol.count && out.size() < range; ++i) {
    u64 v = lo + rng.below(range);
    while (skipped(v)) v = lo + rng.below(range);
    out.push_back(v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Small modular helpers

u64 sign_res(int sign, u64 m) { return sign >= 0 ? 1 % m : m - 1; }

u64 apply_sign(int sign, u64 v, u64 m) { return sign >= 0 ? v % m : submod(0, v % m, m); }

u64 neg_pow(u64 exponent, u64 m) { return exponent % 2 == 0 ? 1 % m : m - 1; }

u64 eval_poly_prefix(const std::vector<u64>& coeff, std::size_t len, u64 x, u64 m) {
  u64 acc = 0;
  for (std::size_t i = len; i-- > 0;) acc = addmod(mulmod(acc, x, m), coeff[i], m);
  return acc;
}

u64 eval_poly(const std::vector<u64>& coeff, u64 x, u64 m) {
  return eval_poly_prefix(coeff, coeff.size(), x, m);
}

// Coefficient vector c_k = family term(k) * ratio^k as exact residues.
std::vector<u64> term_coeffs(TermFamily family, u64 ratio, u64 upper, u64 modulus,
                             const PrimeContext& ctx) {
  const u64 p = ctx.p();
  const u32 width = modulus == p ? 1 : 2;
  std::vector<u64> c(upper + 1);
  u64 zk = 1 % modulus;
  for (u64 k = 0; k <= upper; ++k) {
    const FactorialDecomp t = series_term(family, k, ctx);
    if (t.val >= width) {
      c[k] = 0;
    } else {
      u64 v = mulmod(t.unit % modulus, zk, modulus);
      if (t.val == 1) v = mulmod(v % p, p, modulus);
      c[k] = v;
    }
    zk = mulmod(zk, ratio, modulus);
  }
  return c;
}

// ---------------------------------------------------------------------------
// Outcome plumbing

void skip(CheckOutcome& out, std::string reason) {
  out.status = CheckStatus::Skipped;
  out.reason = std::move(reason);
}

void hold(CheckOutcome& out, u64 lhs, u64 rhs) {
  out.status = CheckStatus::Holds;
  out.lhs = std::to_string(lhs);
  out.rhs = std::to_string(rhs);
}

void fail(CheckOutcome& out, u64 lhs, u64 rhs) {
  out.status = CheckStatus::Fails;
  out.lhs = std::to_string(lhs);
  out.rhs = std::to_string(rhs);
}

void put_witness(CheckOutcome& out, std::string key, i64 value) {
  out.witness.emplace_back(std::move(key), value);
}

// Verifies q0 == q1 == ... ; on mismatch records the offending pair.
bool all_equal(CheckOutcome& out, std::initializer_list<u64> values) {
  const u64* first = values.begin();
  for (const u64* v = values.begin() + 1; v != values.end(); ++v) {
    if (*v != *first) {
      fail(out, *first, *v);
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Quadratic-form witnesses with the normalizations the statements use

struct PairRep {
  i64 x;
  i64 y;
};

// p = a^2 + b^2 with a odd, sign fixed by a = 1 (mod 4).
PairRep rep_a1_mod4(u64 p) {
  auto rep = represent(p, forms::x2_y2);
  if (!rep) throw std::logic_error("no x^2+y^2 representation for p = 1 (mod 4)");
  i64 a = rep->x % 2 != 0 ? rep->x : rep->y;
  i64 b = rep->x % 2 != 0 ? rep->y : rep->x;
  a = normalize_sign({a, b, rep->form}, SignRule{4, 1}).x;
  return {a, b};
}

// p = A^2 + 3B^2 with A = 1 (mod 3).
PairRep rep_A1_mod3(u64 p) {
  auto rep = represent(p, forms::x2_3y2);
  if (!rep) throw std::logic_error("no x^2+3y^2 representation for p = 1 (mod 3)");
  return {normalize_sign(*rep, SignRule{3, 1}).x, rep->y};
}

// p = x^2 + y^2 with x odd (sign-free: only x^2 enters the statements).
PairRep rep_odd_x(u64 p) {
  auto rep = represent(p, forms::x2_y2);
  if (!rep) throw std::logic_error("no x^2+y^2 representation for p = 1 (mod 4)");
  if (rep->x % 2 != 0) return {rep->x, rep->y};
  return {rep->y, rep->x};
}

PairRep rep_plain(u64 p, QuadForm form, const char* what) {
  auto rep = represent(p, form);
  if (!rep) throw std::logic_error(std::string("no ") + what + " representation where one must exist");
  return {rep->x, rep->y};
}

u64 four_x2_minus_2p(i64 x, u64 p, u64 p2) {
  return submod(signed_mod(4 * x * x, p2), (2 * p) % p2, p2);
}

// ---------------------------------------------------------------------------
// Cached eta expansions for E2.2 / E2.3

const std::vector<mpz_class>& eta_coeffs(bool b_series, u64 n) {
  static std::mutex mu;
  static std::map<std::pair<bool, u64>, std::vector<mpz_class>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({b_series, n});
  if (it == cache.end()) {
    auto spec = b_series ? EtaProductSpec::eta_b(n) : EtaProductSpec::eta_a(n);
    it = cache.emplace(std::make_pair(b_series, n), expand(spec)).first;
  }
  return it->second;
}

// ---------------------------------------------------------------------------
// The checks.  Each function assumes the declarative gates already passed.

using CheckFn = void (*)(const PrimeContext&, const CheckConfig&, SplitMix64&, CheckOutcome&);

// Eq. (1.1): sum_{k<=s} C(2k,k)^2/16^k = (-1)^s (mod p^2).
void check_e1_1(const PrimeContext& ctx, const CheckConfig&, SplitMix64&, CheckOutcome& out) {
  const u64 p2 = ctx.p2();
  const u64 s = (ctx.p() - 1) / 2;
  const u64 lhs = series_sum(TermFamily::CentralSq, 16, Weight::one(), s, p2, ctx).value;
  const u64 rhs = neg_pow(s, p2);
  if (lhs == rhs) hold(out, lhs, rhs); else fail(out, lhs, rhs);
}

// Lemma 2.2: C(s+k, 2k) = C(2k,k)/(-16)^k (1 - p^2 sum 1/(2i-1)^2) (mod p^4).
void check_l2_2(const PrimeContext& ctx, const CheckConfig& cfg, SplitMix64&, CheckOutcome& out) {
  const u64 p = ctx.p();
  const u64 limit = std::min<u64>(cfg.p4_limit, u64(1) << 15);  // p^4 must fit the residue width
  if (p >= limit) {
    skip(out, "requires p < " + std::to_string(limit) + " for mod p^4 arithmetic");
    return;
  }
  const u64 p2 = ctx.p2();
  const u64 p4 = *ctx.p4();
  const u64 s = (p - 1) / 2;
  const u64 inv_m16 = mod_inv(signed_mod(-16, p4), p4);

  u64 binom = 1;   // C(s+k, 2k) mod p^4, updated incrementally
  u64 central = 1; // C(2k,k)/(-16)^k mod p^4
  u64 harmonic = 0;  // sum 1/(2i-1)^2 mod p^2
  u64 first_lhs = 0, first_rhs = 0;
  for (u64 k = 1; k <= s; ++k) {
    const u64 num = mulmod((s + k) % p4, (s - k + 1) % p4, p4);
    const u64 den = mod_inv(mulmod((2 * k) % p4, (2 * k - 1) % p4, p4), p4);
    binom = mulmod(binom, mulmod(num, den, p4), p4);
    central = mulmod(central, mulmod(mulmod((2 * k) % p4, (2 * k - 1) % p4, p4),
                                     mod_inv(mulmod(k, k, p4), p4), p4), p4);
    central = mulmod(central, inv_m16, p4);
    const u64 inv_odd = ctx.inv_below_p(2 * k - 1);
    harmonic = addmod(harmonic, mulmod(inv_odd, inv_odd, p2), p2);
    const u64 rhs = mulmod(central, submod(1, mulmod(p2 % p4, harmonic, p4), p4), p4);
    if (binom != rhs) {
      fail(out, binom, rhs);
      put_witness(out, "k", static_cast<i64>(k));
      return;
    }
    if (k == 1) {
      first_lhs = binom;
      first_rhs = rhs;
    }
  }
  hold(out, first_lhs, first_rhs);
  put_witness(out, "k_max", static_cast<i64>(s));
}

// Eq. (2.2): a(p) = A((p-1)/2) = sum C(2k,k)^4/256^k (mod p^2).
void check_e2_2(const PrimeContext& ctx, const CheckConfig& cfg, SplitMix64&, CheckOutcome& out) {
  const u64 p = ctx.p();
  if (p > cfg.qseries_n) {
    skip(out, "p exceeds q-series truncation " + std::to_string(cfg.qseries_n));
    return;
  }
  const u64 p2 = ctx.p2();
  const u64 ap = mpz_fdiv_ui(eta_coeffs(false, cfg.qseries_n)[p].get_mpz_t(), p2);
  const u64 apery = apery_half(ctx).value;
  const u64 series = series_sum(TermFamily::CentralFourth, 256, Weight::one(), (p - 1) / 2, p2, ctx).value;
  if (all_equal(out, {ap, apery, series})) hold(out, ap, series);
}

// Eq. (2.3): sum_{k>=1} C(2k,k)^3/64^k = b(p) (mod p^2); the k = 0 term (= 1)
// is included on the left so the full sum is compared against b(p).
void check_e2_3(const PrimeContext& ctx, const CheckConfig& cfg, SplitMix64&, CheckOutcome& out) {
  const u64 p = ctx.p();
  if (p > cfg.qseries_n) {
    skip(out, "p exceeds q-series truncation " + std::to_string(cfg.qseries_n));
    return;
  }
  const u64 p2 = ctx.p2();
  const u64 bp = mpz_fdiv_ui(eta_coeffs(true, cfg.qseries_n)[p].get_mpz_t(), p2);
  const u64 lhs = series_sum(TermFamily::CentralCube, 64, Weight::one(), (p - 1) / 2, p2, ctx).value;
  if (lhs == bp) hold(out, lhs, bp); else fail(out, lhs, bp);
}

// Theorem 2.1: both truncations of sum C(2k,k)^2/16^k (x^k - (-1)^s (1-x)^k)
// vanish mod p^2, for sampled integer x including lifts in [0, p^2).
void check_t2_1(const PrimeContext& ctx, const CheckConfig& cfg, SplitMix64& rng, CheckOutcome& out) {
  const u64 p = ctx.p();
  const u64 p2 = ctx.p2();
  const u64 s = (p - 1) / 2;
  const u64 eps = neg_pow(s, p2);
  const std::vector<u64> coeff = term_coeffs(TermFamily::CentralSq, mod_inv(16 % p2, p2), p - 1, p2, ctx);

  std::vector<u64> xs = sample_values(p, 0, {}, 500, cfg, rng);
  const u64 lifts = cfg.x_sample.count;
  for (u64 i = 0; i < lifts; ++i) xs.push_back(rng.below(p2));

  auto vanishes = [&](u64 upper, u64 x) {
    const u64 at_x = eval_poly_prefix(coeff, upper + 1, x, p2);
    const u64 at_1mx = eval_poly_prefix(coeff, upper + 1, submod(1, x, p2), p2);
    return submod(at_x, mulmod(eps, at_1mx, p2), p2);
  };
  for (u64 x : xs) {
    for (u64 upper : {p - 1, s}) {
      const u64 diff = vanishes(upper, x);
      if (diff != 0) {
        fail(out, diff, 0);
        put_witness(out, "x", static_cast<i64>(x));
        put_witness(out, "upper", static_cast<i64>(upper));
        return;
      }
    }
  }
  hold(out, 0, 0);
  put_witness(out, "x_samples", static_cast<i64>(xs.size()));
}

// Theorem 2.2: sum C(2k,k)^2/32^k, zero when p = 3 (mod 4), else 2a - p/(2a).
void check_t2_2(const PrimeContext& ctx, const CheckConfig&, SplitMix64&, CheckOutcome& out) {
  const u64 p = ctx.p();
  const u64 p2 = ctx.p2();
  const u64 lhs = series_sum(TermFamily::CentralSq, 32, Weight::one(), (p - 1) / 2, p2, ctx).value;
  put_witness(out, "p_mod_4", static_cast<i64>(p % 4));
  u64 rhs = 0;
  if (p % 4 == 1) {
    const PairRep r = rep_a1_mod4(p);
    const u64 two_a = signed_mod(2 * r.x, p2);
    rhs = submod(two_a, mulmod(p % p2, mod_inv(two_a, p2), p2), p2);
    put_witness(out, "a", r.x);
    put_witness(out, "b", r.y);
  }
  if (lhs == rhs) hold(out, lhs, rhs); else fail(out, lhs, rhs);
}

// Theorem 2.3: the falling-factorial weighted /32^k sums, all r in [1, s].
void check_t2_3(const PrimeContext& ctx, const CheckConfig& cfg, SplitMix64& rng, CheckOutcome& out) {
  const u64 p = ctx.p();
  const u64 p2 = ctx.p2();
  const u64 s = (p - 1) / 2;
  const std::vector<u64> coeff = term_coeffs(TermFamily::CentralSq, mod_inv(32 % p2, p2), s, p2, ctx);
  const u64 inv_2_s = mod_inv(powmod(2, s, p2), p2);

  std::vector<u64> rs;
  const SamplePolicy& pol = cfg.x_sample;
  const bool all = pol.mode == SamplePolicy::Mode::All || (pol.mode == SamplePolicy::Mode::Auto && p < 500);
  if (all) {
    for (u64 r = 1; r <= s; ++r) rs.push_back(r);
  } else {
    const u32 count = pol.mode == SamplePolicy::Mode::Auto ? 16 : pol.count;
    for (u32 i = 0; i < count; ++i) rs.push_back(1 + rng.below(s));
  }

  u64 shown_lhs = 0, shown_rhs = 0;
  bool shown = false;
  for (u64 r : rs) {
    u64 lhs = 0;
    for (u64 k = r; k <= s; ++k) {
      const u64 fall = mulmod(ctx.fact_unit(k), ctx.inv_fact_unit(k - r), p2);
      lhs = addmod(lhs, mulmod(coeff[k], fall, p2), p2);
    }
    u64 rhs = 0;
    if ((p - 1 - 2 * r) % 4 == 0) {
      const u64 lo = (p - 1 - 2 * r) / 4, hi = (p - 1 + 2 * r) / 4;
      u64 ratio = mulmod(ctx.fact_unit(s + r), mulmod(ctx.inv_fact_unit(lo), ctx.inv_fact_unit(hi), p2), p2);
      rhs = mulmod(mulmod(neg_pow(hi, p2), inv_2_s, p2), ratio, p2);
    }
    if (lhs != rhs) {
      fail(out, lhs, rhs);
      put_witness(out, "r", static_cast<i64>(r));
      return;
    }
    if (!shown) {
      shown_lhs = lhs;
      shown_rhs = rhs;
      shown = true;
    }
  }
  hold(out, shown_lhs, shown_rhs);
  put_witness(out, "r_count", static_cast<i64>(rs.size()));
}

// Corollary 2.1: the k^2-weighted /32^k sum; also re-derived through
// falling-factorial weights (k^2 = k(k-1) + k) as a consistency cross-check.
void check_c2_1(const PrimeContext& ctx, const CheckConfig&, SplitMix64&, CheckOutcome& out) {
  const u64 p = ctx.p();
  const u64 p2 = ctx.p2();
  const u64 s = (p - 1) / 2;
  const std::vector<u64> coeff = term_coeffs(TermFamily::CentralSq, mod_inv(32 % p2, p2), s, p2, ctx);
  u64 direct = 0;
  for (u64 k = 0; k <= s; ++k)
    direct = addmod(direct, mulmod(coeff[k], mulmod(k % p2, k % p2, p2), p2), p2);
  const u64 fall2 = series_sum(TermFamily::CentralSq, 32, Weight::falling(2), s, p2, ctx).value;
  const u64 fall1 = series_sum(TermFamily::CentralSq, 32, Weight::falling(1), s, p2, ctx).value;
  const u64 composed = addmod(fall2, fall1, p2);

  const u64 inv_2_s = mod_inv(powmod(2, s, p2), p2);
  u64 rhs;
  if (p % 4 == 1) {
    const u64 top = (p + 3) / 2, lo = (p - 5) / 4, hi = (p + 3) / 4;
    u64 ratio = mulmod(ctx.fact_unit(top), mulmod(ctx.inv_fact_unit(lo), ctx.inv_fact_unit(hi), p2), p2);
    rhs = mulmod(mulmod(neg_pow(hi, p2), inv_2_s, p2), ratio, p2);
  } else {
    const u64 top = (p + 1) / 2, lo = (p - 3) / 4, hi = (p + 1) / 4;
    u64 ratio = mulmod(ctx.fact_unit(top), mulmod(ctx.inv_fact_unit(lo), ctx.inv_fact_unit(hi), p2), p2);
    rhs = mulmod(mulmod(neg_pow(hi, p2), inv_2_s, p2), ratio, p2);
  }
  put_witness(out, "p_mod_4", static_cast<i64>(p % 4));
  if (all_equal(out, {direct, composed, rhs})) hold(out, direct, rhs);
}

// Theorem 2.4: sum_{k<=[p/3]} (3k)!/(27^k k!^3) (x^k - (-1)^[p/3] (1-x)^k) = 0 (mod p).
void check_t2_4(const PrimeContext& ctx, const CheckConfig& cfg, SplitMix64& rng, CheckOutcome& out) {
  const u64 p = ctx.p();
  const u64 u = p / 3;
  const u64 eps = neg_pow(u, p);
  const std::vector<u64> coeff = term_coeffs(TermFamily::ThreeK, mod_inv(27 % p, p), u, p, ctx);
  const std::vector<u64> xs = sample_values(p, 0, {}, 500, cfg, rng);
  for (u64 x : xs) {
    const u64 diff = submod(eval_poly(coeff, x, p), mulmod(eps, eval_poly(coeff, submod(1, x, p), p), p), p);
    if (diff != 0) {
      fail(out, diff, 0);
      put_witness(out, "x", static_cast<i64>(x));
      return;
    }
  }
  hold(out, 0, 0);
  put_witness(out, "x_samples", static_cast<i64>(xs.size()));
}

// Corollary 2.2: sum_{k<=[p/3]} (3k)!/(27^k k!^3) = (p | 3) (mod p).
void check_c2_2(const PrimeContext& ctx, const CheckConfig&, SplitMix64&, CheckOutcome& out) {
  const u64 p = ctx.p();
  const u64 lhs = series_sum(TermFamily::ThreeK, 27, Weight::one(), p / 3, p, ctx).value;
  const u64 rhs = sign_res(legendre_symbol(static_cast<i64>(p), 3), p);
  if (lhs == rhs) hold(out, lhs, rhs); else fail(out, lhs, rhs);
}

// Remark 2.2: the full sum to p-1 satisfies the same identity mod p^2.
void check_r2_2(const PrimeContext& ctx, const CheckConfig&, SplitMix64&, CheckOutcome& out) {
  const u64 p = ctx.p();
  const u64 p2 = ctx.p2();
  const u64 lhs = series_sum(TermFamily::ThreeK, 27, Weight::one(), p - 1, p2, ctx).value;
  const u64 rhs = sign_res(legendre_symbol(static_cast<i64>(p), 3), p2);
  if (lhs == rhs) hold(out, lhs, rhs); else fail(out, lhs, rhs);
}

// Lemma 2.4: C(s,k) = C(2k,k)/(-4)^k (1 - p sum 1/(2i-1)) (mod p^2), k in [1, s].
void check_l2_4(const PrimeContext& ctx, const CheckConfig&, SplitMix64&, CheckOutcome& out) {
  const u64 p = ctx.p();
  const u64 p2 = ctx.p2();
  const u64 s = (p - 1) / 2;
  const u64 inv_m4 = mod_inv(signed_mod(-4, p2), p2);
  u64 inv_m4_k = 1, harmonic = 0;
  u64 first_lhs = 0, first_rhs = 0;
  for (u64 k = 1; k <= s; ++k) {
    inv_m4_k = mulmod(inv_m4_k, inv_m4, p2);
    harmonic = addmod(harmonic, ctx.inv_below_p(2 * k - 1), p2);
    const u64 lhs = binom_mod(s, k, p2, ctx).value;
    u64 rhs = mulmod(binom_mod(2 * k, k, p2, ctx).value, inv_m4_k, p2);
    rhs = mulmod(rhs, submod(1, mulmod(p, harmonic, p2), p2), p2);
    if (lhs != rhs) {
      fail(out, lhs, rhs);
      put_witness(out, "k", static_cast<i64>(k));
      return;
    }
    if (k == 1) {
      first_lhs = lhs;
      first_rhs = rhs;
    }
  }
  hold(out, first_lhs, first_rhs);
  put_witness(out, "k_max", static_cast<i64>(s));
}

// Theorem 2.5, first sum: 0 or 2A by p mod 6 (mod p).
void check_t2_5a(const PrimeContext& ctx, const CheckConfig&, SplitMix64&, CheckOutcome& out) {
  const u64 p = ctx.p();
  const u64 lhs = series_sum(TermFamily::ThreeK, 54, Weight::one(), p / 3, p, ctx).value;
  put_witness(out, "p_mod_6", static_cast<i64>(p % 6));
  u64 rhs = 0;
  if (p % 6 == 1) {
    const PairRep r = rep_A1_mod3(p);
    rhs = signed_mod(2 * r.x, p);
    put_witness(out, "A", r.x);
    put_witness(out, "B", r.y);
  }
  if (lhs == rhs) hold(out, lhs, rhs); else fail(out, lhs, rhs);
}

// Theorem 2.5, k-weighted sum: 0 or the closed binomial form (mod p).
void check_t2_5b(const PrimeContext& ctx, const CheckConfig&, SplitMix64&, CheckOutcome& out) {
  const u64 p = ctx.p();
  const u64 lhs = series_sum(TermFamily::ThreeK, 54, Weight::linear_k(), p / 3, p, ctx).value;
  put_witness(out, "p_mod_6", static_cast<i64>(p % 6));
  u64 rhs = 0;
  if (p % 6 == 5) {
    u64 v = binom_mod((p + 1) / 3, (p + 1) / 6, p, ctx).value;
    v = mulmod(v, mod_inv(powmod(2, (p + 1) / 3, p), p), p);
    v = mulmod(v, mod_inv(3, p), p);
    rhs = (p + 1) / 6 % 2 == 0 ? v : submod(0, v, p);
  }
  if (lhs == rhs) hold(out, lhs, rhs); else fail(out, lhs, rhs);
}

// Lemma 2.5: three expressions for (-1)^k C(s+k,k)/C(s,k) agree mod p^2.
void check_l2_5(const PrimeContext& ctx, const CheckConfig&, SplitMix64&, CheckOutcome& out) {
  const u64 p = ctx.p();
  const u64 p2 = ctx.p2();
  const u64 s = (p - 1) / 2;
  const u64 m4 = signed_mod(-4, p2);
  u64 m4_k = 1, harmonic = 0;
  u64 first_lhs = 0, first_rhs = 0;
  for (u64 k = 1; k <= s; ++k) {
    m4_k = mulmod(m4_k, m4, p2);
    harmonic = addmod(harmonic, ctx.inv_below_p(2 * k - 1), p2);
    const u64 cs_k = binom_mod(s, k, p2, ctx).value;
    const u64 q1 = mulmod(neg_pow(k, p2),
                          mulmod(binom_mod(s + k, k, p2, ctx).value, mod_inv(cs_k, p2), p2), p2);
    const u64 q2 = addmod(1, mulmod(2 * p % p2, harmonic, p2), p2);
    const u64 q3 = submod(3, mulmod(2, mulmod(m4_k, mulmod(cs_k, mod_inv(binom_mod(2 * k, k, p2, ctx).value, p2), p2), p2), p2), p2);
    if (q1 != q2 || q2 != q3) {
      fail(out, q1, q1 != q2 ? q2 : q3);
      put_witness(out, "k", static_cast<i64>(k));
      return;
    }
    if (k == 1) {
      first_lhs = q1;
      first_rhs = q3;
    }
  }
  hold(out, first_lhs, first_rhs);
  put_witness(out, "k_max", static_cast<i64>(s));
}

// Theorem 2.6: P_s(x) = (2(x+1) | p) P_s((3-x)/(1+x)) (mod p), x != -1.
void check_t2_6(const PrimeContext& ctx, const CheckConfig& cfg, SplitMix64& rng, CheckOutcome& out) {
  const u64 p = ctx.p();
  const u64 s = (p - 1) / 2;
  const std::vector<u64> xs = sample_values(p, 0, {p - 1}, 500, cfg, rng);
  for (u64 x : xs) {
    const u64 lhs = legendre_eval_recurrence(s, {x, p}, ctx, p).value;
    const u64 arg = mulmod(submod(3 % p, x, p), mod_inv(addmod(x, 1, p), p), p);
    const int sym = legendre_symbol(static_cast<i64>(mulmod(2, addmod(x, 1, p), p)), p);
    const u64 rhs = apply_sign(sym, legendre_eval_recurrence(s, {arg, p}, ctx, p).value, p);
    if (lhs != rhs) {
      fail(out, lhs, rhs);
      put_witness(out, "x", static_cast<i64>(x));
      return;
    }
  }
  hold(out, 0, 0);
  put_witness(out, "x_samples", static_cast<i64>(xs.size()));
}

// Corollary 2.3: p | P_s(3) for p = 3 (mod 4).
void check_c2_3(const PrimeContext& ctx, const CheckConfig&, SplitMix64&, CheckOutcome& out) {
  const u64 p = ctx.p();
  if (p % 4 != 3) {
    skip(out, "requires p mod 4 == 3");
    return;
  }
  const u64 lhs = legendre_eval_recurrence((p - 1) / 2, {3 % p, p}, ctx, p).value;
  if (lhs == 0) hold(out, lhs, 0); else fail(out, lhs, 0);
}

// Theorem 2.7: sum C(2k,k)^2/16^k (x^k - (x|p) x^-k) = 0 (mod p), x != 0.
void check_t2_7(const PrimeContext& ctx, const CheckConfig& cfg, SplitMix64& rng, CheckOutcome& out) {
  const u64 p = ctx.p();
  const u64 s = (p - 1) / 2;
  const std::vector<u64> coeff = term_coeffs(TermFamily::CentralSq, mod_inv(16 % p, p), s, p, ctx);
  const std::vector<u64> xs = sample_values(p, 1, {}, 500, cfg, rng);
  for (u64 x : xs) {
    const u64 at_x = eval_poly(coeff, x, p);
    const u64 at_inv = eval_poly(coeff, mod_inv(x, p), p);
    const u64 diff = submod(at_x, apply_sign(legendre_symbol(static_cast<i64>(x), p), at_inv, p), p);
    if (diff != 0) {
      fail(out, diff, 0);
      put_witness(out, "x", static_cast<i64>(x));
      return;
    }
  }
  hold(out, 0, 0);
  put_witness(out, "x_samples", static_cast<i64>(xs.size()));
}

// Eq. (2.7): sum C(2k,k)^2/(16x)^k = (x(x-1) | p) sum C(2k,k)^2/(16(1-x))^k (mod p).
void check_e2_7(const PrimeContext& ctx, const CheckConfig& cfg, SplitMix64& rng, CheckOutcome& out) {
  const u64 p = ctx.p();
  const u64 s = (p - 1) / 2;
  const std::vector<u64> coeff = term_coeffs(TermFamily::CentralSq, 1, s, p, ctx);
  const u64 inv16 = mod_inv(16 % p, p);
  const std::vector<u64> xs = sample_values(p, 1, {1 % p}, 500, cfg, rng);
  for (u64 x : xs) {
    const u64 lhs = eval_poly(coeff, mulmod(inv16, mod_inv(x, p), p), p);
    const u64 other = eval_poly(coeff, mulmod(inv16, mod_inv(submod(1, x, p), p), p), p);
    const int sym = legendre_symbol(static_cast<i64>(mulmod(x, submod(x, 1, p), p)), p);
    const u64 rhs = apply_sign(sym, other, p);
    if (lhs != rhs) {
      fail(out, lhs, rhs);
      put_witness(out, "x", static_cast<i64>(x));
      return;
    }
  }
  hold(out, 0, 0);
  put_witness(out, "x_samples", static_cast<i64>(xs.size()));
}

// Theorem 2.8: sum C(2k,k)^2 (x/4)^2k = (-x | p) P_s((x + 1/x)/2) (mod p).
void check_t2_8(const PrimeContext& ctx, const CheckConfig& cfg, SplitMix64& rng, CheckOutcome& out) {
  const u64 p = ctx.p();
  const u64 s = (p - 1) / 2;
  const std::vector<u64> coeff = term_coeffs(TermFamily::CentralSq, 1, s, p, ctx);
  const u64 inv16 = mod_inv(16 % p, p);
  const u64 inv2 = (p + 1) / 2;
  const std::vector<u64> xs = sample_values(p, 1, {}, 500, cfg, rng);
  for (u64 x : xs) {
    const u64 lhs = eval_poly(coeff, mulmod(mulmod(x, x, p), inv16, p), p);
    const u64 arg = mulmod(addmod(x, mod_inv(x, p), p), inv2, p);
    const int sym = legendre_symbol(-static_cast<i64>(x), p);
    const u64 rhs = apply_sign(sym, legendre_eval_recurrence(s, {arg, p}, ctx, p).value, p);
    if (lhs != rhs) {
      fail(out, lhs, rhs);
      put_witness(out, "x", static_cast<i64>(x));
      return;
    }
  }
  hold(out, 0, 0);
  put_witness(out, "x_samples", static_cast<i64>(xs.size()));
}

// Eq. (2.8), Kelisky identity, exact over n <= 40, x in [1, 10].
// Prime-independent; reported under the pseudo-prime key 0.
void check_k2_8(CheckOutcome& out) {
  mpz_class shown_lhs, shown_rhs;
  for (u64 n = 0; n <= 40; ++n) {
    for (i64 x = 1; x <= 10; ++x) {
      const mpz_class lhs = kelisky_lhs_exact(n, x);
      mpq_class arg(mpz_class(x) * x + 1, 2 * x);
      arg.canonicalize();
      mpq_class rhs_q = legendre_eval_exact(n, arg);
      mpz_class pow4x;
      mpz_ui_pow_ui(pow4x.get_mpz_t(), 4, static_cast<unsigned long>(n));
      mpz_class xn;
      mpz_pow_ui(xn.get_mpz_t(), mpz_class(x).get_mpz_t(), static_cast<unsigned long>(n));
      rhs_q *= mpq_class(pow4x * xn);
      rhs_q.canonicalize();
      if (rhs_q.get_den() != 1 || rhs_q.get_num() != lhs) {
        out.status = CheckStatus::Fails;
        out.lhs = lhs.get_str();
        out.rhs = rhs_q.get_num().get_str() + "/" + rhs_q.get_den().get_str();
        put_witness(out, "n", static_cast<i64>(n));
        put_witness(out, "x", x);
        return;
      }
      if (n == 40 && x == 10) {
        shown_lhs = lhs;
        shown_rhs = rhs_q.get_num();
      }
    }
  }
  out.status = CheckStatus::Holds;
  out.lhs = shown_lhs.get_str();
  out.rhs = shown_rhs.get_str();
  put_witness(out, "n_max", 40);
  put_witness(out, "x_max", 10);
}

// Eq. (2.9): C(p-1-2k, s-k) = (-1)^s C(2k,k)/16^k (mod p), 0 <= k <= s.
void check_e2_9(const PrimeContext& ctx, const CheckConfig&, SplitMix64&, CheckOutcome& out) {
  const u64 p = ctx.p();
  const u64 s = (p - 1) / 2;
  const u64 sgn = neg_pow(s, p);
  const u64 inv16 = mod_inv(16 % p, p);
  u64 inv16_k = 1;
  u64 first_lhs = 0, first_rhs = 0;
  for (u64 k = 0; k <= s; ++k) {
    const u64 lhs = binom_mod(p - 1 - 2 * k, s - k, p, ctx).value;
    const u64 rhs = mulmod(sgn, mulmod(binom_mod(2 * k, k, p, ctx).value, inv16_k, p), p);
    if (lhs != rhs) {
      fail(out, lhs, rhs);
      put_witness(out, "k", static_cast<i64>(k));
      return;
    }
    if (k == 0) {
      first_lhs = lhs;
      first_rhs = rhs;
    }
    inv16_k = mulmod(inv16_k, inv16, p);
  }
  hold(out, first_lhs, first_rhs);
  put_witness(out, "k_max", static_cast<i64>(s));
}

// Theorem 2.9: /8^k and /(-16)^k sums and P_s(3) all equal
// (-1)^((p-1)/4) (2a - p/(2a)) mod p^2, for p = 1 (mod 4).
void check_t2_9(const PrimeContext& ctx, const CheckConfig&, SplitMix64&, CheckOutcome& out) {
  const u64 p = ctx.p();
  if (p % 4 != 1) {
    skip(out, "requires p mod 4 == 1");
    return;
  }
  const u64 p2 = ctx.p2();
  const u64 s = (p - 1) / 2;
  const u64 sum8 = series_sum(TermFamily::CentralSq, 8, Weight::one(), s, p2, ctx).value;
  const u64 summ16 = series_sum(TermFamily::CentralSq, -16, Weight::one(), s, p2, ctx).value;
  const u64 poly = legendre_eval_recurrence(s, {3 % p2, p2}, ctx, p2).value;
  const PairRep r = rep_a1_mod4(p);
  const u64 two_a = signed_mod(2 * r.x, p2);
  u64 rhs = submod(two_a, mulmod(p % p2, mod_inv(two_a, p2), p2), p2);
  if ((p - 1) / 4 % 2 == 1) rhs = submod(0, rhs, p2);
  put_witness(out, "a", r.x);
  put_witness(out, "b", r.y);
  if (all_equal(out, {sum8, summ16, poly, rhs})) hold(out, sum8, rhs);
}

// Theorem 2.10: sum_{k<=(p-1)/4} C(4k,2k)^2/256^k = 1/2 + (-1)^((p-1)/4)(a - p/(4a))
// mod p^2, for p = 1 (mod 4).
void check_t2_10(const PrimeContext& ctx, const CheckConfig&, SplitMix64&, CheckOutcome& out) {
  const u64 p = ctx.p();
  if (p % 4 != 1) {
    skip(out, "requires p mod 4 == 1");
    return;
  }
  const u64 p2 = ctx.p2();
  const u64 lhs = series_sum(TermFamily::Quarter, 256, Weight::one(), (p - 1) / 4, p2, ctx).value;
  const PairRep r = rep_a1_mod4(p);
  const int sgn = (p - 1) / 4 % 2 == 0 ? 1 : -1;
  const u64 a_res = signed_mod(r.x, p2);
  const u64 p_over_4a = mulmod(p % p2, mod_inv(signed_mod(4 * r.x, p2), p2), p2);
  u64 rhs = (p2 + 1) / 2;  // 1/2 mod p^2
  rhs = addmod(rhs, apply_sign(sgn, a_res, p2), p2);
  rhs = submod(rhs, apply_sign(sgn, p_over_4a, p2), p2);
  put_witness(out, "a", r.x);
  put_witness(out, "b", r.y);
  if (lhs == rhs) hold(out, lhs, rhs); else fail(out, lhs, rhs);
}

// Lemma 2.6: the Legendre-curve trace equals (-1)^s sum C(s+k,k) C(s,k) (-l)^k
// (mod p), lambda outside {0, 1}.
void check_l2_6(const PrimeContext& ctx, const CheckConfig& cfg, SplitMix64& rng, CheckOutcome& out) {
  const u64 p = ctx.p();
  const u64 s = (p - 1) / 2;
  std::vector<u64> coeff(s + 1);
  for (u64 k = 0; k <= s; ++k)
    coeff[k] = mulmod(binom_mod(s + k, k, p, ctx).value, binom_mod(s, k, p, ctx).value, p);
  const SymbolTable sym(p);
  const std::vector<u64> lambdas = [&] {
    CheckConfig local = cfg;
    if (cfg.x_sample.mode == SamplePolicy::Mode::Auto) local.x_sample.count = 16;
    return sample_values(p, 0, {0, 1}, 100, local, rng);
  }();
  for (u64 lambda : lambdas) {
    const i64 trace = -char_sum(sym, CubicCurve::legendre_lambda(lambda, p));  // p+1-#E
    const u64 lhs = signed_mod(trace, p);
    const u64 rhs = mulmod(neg_pow(s, p), eval_poly(coeff, submod(0, lambda, p), p), p);
    if (lhs != rhs) {
      fail(out, lhs, rhs);
      put_witness(out, "lambda", static_cast<i64>(lambda));
      return;
    }
  }
  hold(out, 0, 0);
  put_witness(out, "lambda_samples", static_cast<i64>(lambdas.size()));
}

// Theorem 2.11: P_s(t) = sum C(2k,k)^2 ((1-t)/32)^k = -(-6|p) sum_x (f_t(x)|p)
// (mod p) with f_t = x^3 - 3(t^2+3)x + 2t(t^2-9).
void check_t2_11(const PrimeContext& ctx, const CheckConfig& cfg, SplitMix64& rng, CheckOutcome& out) {
  const u64 p = ctx.p();
  const u64 s = (p - 1) / 2;
  const std::vector<u64> coeff = term_coeffs(TermFamily::CentralSq, 1, s, p, ctx);
  const u64 inv32 = mod_inv(32 % p, p);
  const SymbolTable sym(p);
  const int s6 = legendre_symbol(-6, p);
  const std::vector<u64> ts = [&] {
    CheckConfig local = cfg;
    if (cfg.x_sample.mode == SamplePolicy::Mode::Auto) local.x_sample.count = 16;
    return sample_values(p, 0, {}, 301, local, rng);
  }();
  for (u64 t : ts) {
    const u64 q1 = legendre_eval_recurrence(s, {t, p}, ctx, p).value;
    const u64 q2 = eval_poly(coeff, mulmod(submod(1, t, p), inv32, p), p);
    const u64 t2 = mulmod(t, t, p);
    const CubicCurve curve{0, submod(0, mulmod(3, addmod(t2, 3, p), p), p),
                           mulmod(mulmod(2, t, p), submod(t2, 9 % p, p), p)};
    const u64 q3 = apply_sign(-s6, signed_mod(char_sum(sym, curve), p), p);
    if (q1 != q2 || q2 != q3) {
      fail(out, q1, q1 != q2 ? q2 : q3);
      put_witness(out, "t", static_cast<i64>(t));
      return;
    }
  }
  const u64 rep = ts.empty() ? 0 : legendre_eval_recurrence(s, {ts.back(), p}, ctx, p).value;
  hold(out, rep, rep);
  put_witness(out, "t_samples", static_cast<i64>(ts.size()));
}

// Theorem 2.12: the five fixed-argument variants.  Each compares
// P_s(t0), two scaled series and a signed cubic character sum.
struct T212Variant {
  i64 t0;
  i64 m2;        // first series constant
  i64 m3;        // second series constant
  int sign2_kind;  // 0: +1, 1: (-1)^s, 2: (2|p), 3: (-2|p)
  int sign3_kind;  // 0: -(p|3), 1: (-1)^((p+1)/2)
  i64 c1, c0;    // curve x^3 + c1 x + c0
};

void check_t2_12(const T212Variant& v, const PrimeContext& ctx, CheckOutcome& out) {
  const u64 p = ctx.p();
  const u64 s = (p - 1) / 2;
  const u64 q1 = legendre_eval_recurrence(s, {signed_mod(v.t0, p), p}, ctx, p).value;
  const u64 q2 = series_sum(TermFamily::CentralSq, v.m2, Weight::one(), s, p, ctx).value;
  int sgn2;
  switch (v.sign2_kind) {
    case 0: sgn2 = 1; break;
    case 1: sgn2 = s % 2 == 0 ? 1 : -1; break;
    case 2: sgn2 = legendre_symbol(2, p); break;
    default: sgn2 = legendre_symbol(-2, p); break;
  }
  const u64 q3 = apply_sign(sgn2, series_sum(TermFamily::CentralSq, v.m3, Weight::one(), s, p, ctx).value, p);
  const int sgn3 = v.sign3_kind == 0 ? -legendre_symbol(static_cast<i64>(p), 3)
                                     : (s % 2 == 0 ? -1 : 1);  // (-1)^((p+1)/2)
  const u64 q4 = apply_sign(sgn3, signed_mod(char_sum(p, CubicCurve::reduce(0, v.c1, v.c0, p)), p), p);
  if (all_equal(out, {q1, q2, q3, q4})) hold(out, q1, q4);
}

// The two quoted conjectures preceding Conjecture 2.1.
void check_zw_a(const PrimeContext& ctx, const CheckConfig&, SplitMix64&, CheckOutcome& out) {
  const u64 p = ctx.p();
  const u64 p2 = ctx.p2();
  const u64 lhs = series_sum(TermFamily::FourK, 256, Weight::one(), p - 1, p2, ctx).value;
  put_witness(out, "p_mod_8", static_cast<i64>(p % 8));
  u64 rhs = 0;
  if (p % 8 == 1 || p % 8 == 3) {
    const PairRep r = rep_plain(p, forms::x2_2y2, "x^2+2y^2");
    rhs = four_x2_minus_2p(r.x, p, p2);
    put_witness(out, "x", r.x);
    put_witness(out, "y", r.y);
  }
  if (lhs == rhs) hold(out, lhs, rhs); else fail(out, lhs, rhs);
}

void check_zw_b(const PrimeContext& ctx, const CheckConfig&, SplitMix64&, CheckOutcome& out) {
  const u64 p = ctx.p();
  const u64 p2 = ctx.p2();
  const u64 cube = series_sum(TermFamily::CentralCube, 1, Weight::one(), p - 1, p2, ctx).value;
  const u64 fourk = series_sum(TermFamily::FourK, 81, Weight::one(), p - 1, p2, ctx).value;
  put_witness(out, "p_mod_7", static_cast<i64>(p % 7));
  u64 rhs = 0;
  if (legendre_symbol(static_cast<i64>(p), 7) == 1) {
    const PairRep r = rep_plain(p, forms::x2_7y2, "x^2+7y^2");
    rhs = four_x2_minus_2p(r.x, p, p2);
    put_witness(out, "x", r.x);
    put_witness(out, "y", r.y);
  }
  if (all_equal(out, {cube, fourk, rhs})) hold(out, cube, rhs);
}

// Conjectures 2.1-2.13 share the skeleton: a full sum to p-1 mod p^2 against
// a quadratic-form branch.
struct ConjectureSpec {
  TermFamily family;
  i64 constant;
};

u64 conjecture_sum(const ConjectureSpec& spec, const PrimeContext& ctx) {
  return series_sum(spec.family, spec.constant, Weight::one(), ctx.p() - 1, ctx.p2(), ctx).value;
}

void check_cj_4x2(const ConjectureSpec& spec, QuadForm form, bool odd_x, int branch_mod,
                  const std::vector<u64>& residues_hit, int jacobi_lower,
                  const PrimeContext& ctx, CheckOutcome& out) {
  // jacobi_lower: 0 for plain 4x^2-2p, else (p | jacobi_lower) scales it.
  const u64 p = ctx.p();
  const u64 p2 = ctx.p2();
  const u64 lhs = conjecture_sum(spec, ctx);
  put_witness(out, "p_mod_" + std::to_string(branch_mod), static_cast<i64>(p % branch_mod));
  u64 rhs = 0;
  const bool hit = std::find(residues_hit.begin(), residues_hit.end(), p % branch_mod) != residues_hit.end();
  if (hit) {
    const PairRep r = odd_x ? rep_odd_x(p) : rep_plain(p, form, "quadratic-form");
    rhs = four_x2_minus_2p(r.x, p, p2);
    if (jacobi_lower != 0) rhs = apply_sign(jacobi_symbol(static_cast<i64>(p), jacobi_lower), rhs, p2);
    put_witness(out, "x", r.x);
    put_witness(out, "y", r.y);
  }
  if (lhs == rhs) hold(out, lhs, rhs); else fail(out, lhs, rhs);
}

void check_cj2_5(const PrimeContext& ctx, CheckOutcome& out) {
  const u64 p = ctx.p();
  const u64 p2 = ctx.p2();
  const u64 lhs = conjecture_sum({TermFamily::SixK, 8000}, ctx);
  put_witness(out, "p_mod_8", static_cast<i64>(p % 8));
  u64 rhs = 0;
  if (p % 8 == 1 || p % 8 == 3) {
    const PairRep r = rep_plain(p, forms::x2_2y2, "x^2+2y^2");
    rhs = apply_sign(legendre_symbol(-5, p), four_x2_minus_2p(r.x, p, p2), p2);
    put_witness(out, "x", r.x);
    put_witness(out, "y", r.y);
  }
  if (lhs == rhs) hold(out, lhs, rhs); else fail(out, lhs, rhs);
}

void check_cj2_7(const PrimeContext& ctx, CheckOutcome& out) {
  const u64 p = ctx.p();
  const u64 p2 = ctx.p2();
  const u64 lhs = conjecture_sum({TermFamily::SixK, -12288000}, ctx);
  put_witness(out, "p_mod_3", static_cast<i64>(p % 3));
  u64 rhs = 0;
  if (p % 3 == 1) {
    const PairRep r = rep_plain(p, forms::four_p_l2_27m2, "4p = L^2+27M^2");
    const u64 l2_minus_2p = submod(signed_mod(r.x * r.x, p2), (2 * p) % p2, p2);
    rhs = apply_sign(legendre_symbol(10, p), l2_minus_2p, p2);
    put_witness(out, "L", r.x);
    put_witness(out, "M", r.y);
  }
  if (lhs == rhs) hold(out, lhs, rhs); else fail(out, lhs, rhs);
}

void check_cj2_11(const PrimeContext& ctx, CheckOutcome& out) {
  const u64 p = ctx.p();
  const u64 p2 = ctx.p2();
  const u64 lhs = conjecture_sum({TermFamily::CentralSq3k, 3375}, ctx);
  const u64 res = p % 15;
  put_witness(out, "p_mod_15", static_cast<i64>(res));
  u64 rhs = 0;
  if (res == 1 || res == 4) {
    const PairRep r = rep_plain(p, forms::x2_15y2, "x^2+15y^2");
    rhs = four_x2_minus_2p(r.x, p, p2);
    put_witness(out, "x", r.x);
    put_witness(out, "y", r.y);
  } else if (res == 2 || res == 8) {
    const PairRep r = rep_plain(p, forms::threex2_5y2, "3x^2+5y^2");
    rhs = submod((2 * p) % p2, signed_mod(12 * r.x * r.x, p2), p2);
    put_witness(out, "x", r.x);
    put_witness(out, "y", r.y);
  }
  if (lhs == rhs) hold(out, lhs, rhs); else fail(out, lhs, rhs);
}

void check_cj2_12(const PrimeContext& ctx, CheckOutcome& out) {
  const u64 p = ctx.p();
  const u64 p2 = ctx.p2();
  const u64 lhs = conjecture_sum({TermFamily::CentralSq3k, -8640}, ctx);
  put_witness(out, "p_mod_3", static_cast<i64>(p % 3));
  if (p % 3 != 1) {
    if (lhs == 0) hold(out, lhs, 0); else fail(out, lhs, 0);
    return;
  }
  const PairRep r = rep_plain(p, forms::x2_3y2, "x^2+3y^2");
  put_witness(out, "x", r.x);
  put_witness(out, "y", r.y);
  if ((r.x * r.y) % 5 == 0) {
    const u64 rhs = four_x2_minus_2p(r.x, p, p2);
    if (lhs == rhs) hold(out, lhs, rhs); else fail(out, lhs, rhs);
    return;
  }
  // p - 2x^2 +- 6xy: sign-choice invariant two-element set.
  const i64 base = static_cast<i64>(p) - 2 * r.x * r.x;
  u64 v1 = signed_mod(base + 6 * r.x * r.y, p2);
  u64 v2 = signed_mod(base - 6 * r.x * r.y, p2);
  if (v1 > v2) std::swap(v1, v2);
  out.rhs = "{" + std::to_string(v1) + "," + std::to_string(v2) + "}";
  out.lhs = std::to_string(lhs);
  out.status = (lhs == v1 || lhs == v2) ? CheckStatus::Holds : CheckStatus::Fails;
}

void check_cj2_13(const PrimeContext& ctx, CheckOutcome& out) {
  const u64 p = ctx.p();
  const u64 p2 = ctx.p2();
  const u64 lhs = conjecture_sum({TermFamily::ThreeK, 54}, ctx);
  put_witness(out, "p_mod_3", static_cast<i64>(p % 3));
  u64 rhs = 0;
  if (p % 3 == 1) {
    const PairRep r = rep_plain(p, forms::x2_3y2, "x^2+3y^2");
    const u64 two_x = signed_mod(2 * r.x, p2);
    const u64 value = submod(two_x, mulmod(p % p2, mod_inv(two_x, p2), p2), p2);
    rhs = apply_sign(legendre_symbol(r.x, 3), value, p2);
    put_witness(out, "x", r.x);
    put_witness(out, "y", r.y);
  }
  if (lhs == rhs) hold(out, lhs, rhs); else fail(out, lhs, rhs);
}

// ---------------------------------------------------------------------------
// Registry

struct Entry {
  std::string_view id;
  std::string_view statement;
  std::string_view modulus;    // "p" | "p2" | "p4" | "exact"
  std::string_view hypotheses;
  u64 exclusive_min;           // skip when p <= exclusive_min (0: no bound)
  std::vector<u64> excluded;   // skip when p is listed
  std::vector<i64> constants;  // skip when p divides one of these
  CheckFn fn;
};

template <int V>
void t2_12_thunk(const PrimeContext& ctx, const CheckConfig&, SplitMix64&, CheckOutcome& out) {
  static const T212Variant variants[5] = {
      {-31, 1, 256, 0, 0, -723, -7378},
      {33, -1, -256, 1, 1, -91, 330},
      {-15, 2, 128, 2, 1, -19, -30},
      {9, -4, -64, 1, 1, -7, 6},
      {5, -8, -32, 3, 0, -21, 20},
  };
  check_t2_12(variants[V], ctx, out);
}

template <TermFamily F, i64 C, int BranchMod, bool OddX, int JacobiLower, u64... Hits>
void cj_4x2_thunk(const PrimeContext& ctx, const CheckConfig&, SplitMix64&, CheckOutcome& out) {
  QuadForm form;
  if constexpr (BranchMod == 4) form = forms::x2_y2;
  else if constexpr (BranchMod == 3) form = forms::x2_3y2;
  else form = forms::x2_7y2;
  check_cj_4x2({F, C}, form, OddX, BranchMod, {Hits...}, JacobiLower, ctx, out);
}

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = [] {
    std::vector<Entry> r;
    auto add = [&r](std::string_view id, std::string_view st, std::string_view mod,
                    std::string_view hyp, u64 min, std::vector<u64> excl, std::vector<i64> consts,
                    CheckFn fn) {
      r.push_back({id, st, mod, hyp, min, std::move(excl), std::move(consts), fn});
    };
    add("E1.1", "Eq. (1.1)", "p2", "all odd p", 0, {}, {16}, check_e1_1);
    add("L2.2", "Lemma 2.2", "p4", "odd p < 32768", 0, {}, {-16}, check_l2_2);
    add("E2.2", "Eq. (2.2)", "p2", "odd p <= qseries_N", 0, {}, {256}, check_e2_2);
    add("E2.3", "Eq. (2.3)", "p2", "odd p <= qseries_N; k = 0 term (= 1) included", 0, {}, {64}, check_e2_3);
    add("T2.1", "Theorem 2.1", "p2", "all odd p; x sampled", 0, {}, {16}, check_t2_1);
    add("T2.2", "Theorem 2.2", "p2", "all odd p", 0, {}, {32}, check_t2_2);
    add("T2.3", "Theorem 2.3", "p2", "all odd p; r in [1,(p-1)/2]", 0, {}, {32}, check_t2_3);
    add("C2.1", "Corollary 2.1", "p2", "all odd p", 0, {}, {32}, check_c2_1);
    add("T2.4", "Theorem 2.4", "p", "p > 3; x sampled", 3, {}, {27}, check_t2_4);
    add("C2.2", "Corollary 2.2", "p", "p > 3", 3, {}, {27}, check_c2_2);
    add("R2.2", "Remark 2.2", "p2", "p > 3", 3, {}, {27}, check_r2_2);
    add("L2.4", "Lemma 2.4", "p2", "all odd p", 0, {}, {-4}, check_l2_4);
    add("T2.5a", "Theorem 2.5 (plain sum)", "p", "p > 5", 5, {}, {54}, check_t2_5a);
    add("T2.5b", "Theorem 2.5 (k-weighted sum)", "p", "p > 5", 5, {}, {54}, check_t2_5b);
    add("L2.5", "Lemma 2.5", "p2", "all odd p", 0, {}, {-4}, check_l2_5);
    add("T2.6", "Theorem 2.6", "p", "all odd p; x != -1 sampled", 0, {}, {}, check_t2_6);
    add("C2.3", "Corollary 2.3", "p", "p mod 4 == 3", 0, {}, {}, check_c2_3);
    add("T2.7", "Theorem 2.7", "p", "all odd p; x != 0 sampled", 0, {}, {16}, check_t2_7);
    add("E2.7", "Eq. (2.7)", "p", "all odd p; x != 0,1 sampled", 0, {}, {16}, check_e2_7);
    add("T2.8", "Theorem 2.8", "p", "all odd p; x != 0 sampled", 0, {}, {16}, check_t2_8);
    add("K2.8", "Eq. (2.8), Kelisky identity", "exact", "prime-independent (reported once, p = 0)",
        0, {}, {}, nullptr);
    add("E2.9", "Eq. (2.9)", "p", "all odd p; k in [0,(p-1)/2]", 0, {}, {16}, check_e2_9);
    add("T2.9", "Theorem 2.9", "p2", "p mod 4 == 1", 0, {}, {8, -16}, check_t2_9);
    add("T2.10", "Theorem 2.10", "p2", "p mod 4 == 1", 0, {}, {256}, check_t2_10);
    add("L2.6", "Lemma 2.6", "p", "p > 3; lambda != 0,1 sampled", 3, {}, {}, check_l2_6);
    add("T2.11", "Theorem 2.11", "p", "p > 3; t sampled", 3, {}, {32}, check_t2_11);
    add("T2.12a", "Theorem 2.12 (t = -31)", "p", "p > 3", 3, {}, {256}, t2_12_thunk<0>);
    add("T2.12b", "Theorem 2.12 (t = 33)", "p", "p > 3", 3, {}, {-256}, t2_12_thunk<1>);
    add("T2.12c", "Theorem 2.12 (t = -15)", "p", "p > 3", 3, {}, {2, 128}, t2_12_thunk<2>);
    add("T2.12d", "Theorem 2.12 (t = 9)", "p", "p > 3", 3, {}, {-4, -64}, t2_12_thunk<3>);
    add("T2.12e", "Theorem 2.12 (t = 5)", "p", "p > 3", 3, {}, {-8, -32}, t2_12_thunk<4>);
    add("ZW.A", "Quoted conjecture ((4k)!/(256^k k!^4))", "p2", "p > 3", 3, {}, {256}, check_zw_a);
    add("ZW.B", "Quoted conjecture (C(2k,k)^3 and (4k)!/(81^k k!^4))", "p2", "p != 2, 7", 0, {7}, {81},
        check_zw_b);
    add("CJ2.1", "Conjecture 2.1", "p2", "p > 3", 3, {}, {648},
        cj_4x2_thunk<TermFamily::FourK, 648, 4, true, 0, 1>);
    add("CJ2.2", "Conjecture 2.2", "p2", "p > 3", 3, {}, {-144},
        cj_4x2_thunk<TermFamily::FourK, -144, 3, false, 0, 1>);
    add("CJ2.3", "Conjecture 2.3", "p2", "p != 2, 3, 7", 0, {2, 3, 7}, {-3969},
        cj_4x2_thunk<TermFamily::FourK, -3969, 7, false, 0, 1, 2, 4>);
    add("CJ2.4", "Conjecture 2.4", "p2", "p != 2, 3, 11", 0, {2, 3, 11}, {287496},
        cj_4x2_thunk<TermFamily::SixK, 287496, 4, true, 33, 1>);
    add("CJ2.5", "Conjecture 2.5", "p2", "p > 5", 5, {}, {8000},
        [](const PrimeContext& ctx, const CheckConfig&, SplitMix64&, CheckOutcome& out) {
          check_cj2_5(ctx, out);
        });
    add("CJ2.6", "Conjecture 2.6", "p2", "p > 5", 5, {}, {54000},
        cj_4x2_thunk<TermFamily::SixK, 54000, 3, false, 5, 1>);
    add("CJ2.7", "Conjecture 2.7", "p2", "p > 5", 5, {}, {-12288000},
        [](const PrimeContext& ctx, const CheckConfig&, SplitMix64&, CheckOutcome& out) {
          check_cj2_7(ctx, out);
        });
    add("CJ2.8", "Conjecture 2.8", "p2", "p > 7", 7, {}, {-3375},
        cj_4x2_thunk<TermFamily::SixK, -3375, 7, false, 15, 1, 2, 4>);
    add("CJ2.9", "Conjecture 2.9", "p2", "p != 2, 3, 5, 7, 17", 0, {2, 3, 5, 7, 17}, {16581375},
        cj_4x2_thunk<TermFamily::SixK, 16581375, 7, false, 255, 1, 2, 4>);
    add("CJ2.10", "Conjecture 2.10", "p2", "p > 3", 3, {}, {1458},
        cj_4x2_thunk<TermFamily::CentralSq3k, 1458, 3, false, 0, 1>);
    add("CJ2.11", "Conjecture 2.11", "p2", "p > 5", 5, {}, {3375},
        [](const PrimeContext& ctx, const CheckConfig&, SplitMix64&, CheckOutcome& out) {
          check_cj2_11(ctx, out);
        });
    add("CJ2.12", "Conjecture 2.12", "p2", "p > 5", 5, {}, {-8640},
        [](const PrimeContext& ctx, const CheckConfig&, SplitMix64&, CheckOutcome& out) {
          check_cj2_12(ctx, out);
        });
    add("CJ2.13", "Conjecture 2.13", "p2", "p > 3", 3, {}, {54},
        [](const PrimeContext& ctx, const CheckConfig&, SplitMix64&, CheckOutcome& out) {
          check_cj2_13(ctx, out);
        });
    return r;
  }();
  return entries;
}

const Entry& find_entry(std::string_view id) {
  for (const Entry& e : registry())
    if (e.id == id) return e;
  throw std::invalid_argument("unknown check id: " + std::string(id));
}

CheckOutcome run_entry(const Entry& entry, u64 p, const CheckConfig& cfg, const PrimeContext* ctx) {
  CheckOutcome out;
  out.check = std::string(entry.id);
  out.p = p;
  out.modulus = std::string(entry.modulus);
  const auto start = std::chrono::steady_clock::now();

  if (entry.id == "K2.8") {
    out.p = 0;
    check_k2_8(out);
  } else {
    bool gated = false;
    for (i64 c : entry.constants) {
      const u64 abs_c = static_cast<u64>(c < 0 ? -c : c);
      if (abs_c % p == 0) {
        skip(out, "p divides constant " + std::to_string(c));
        gated = true;
        break;
      }
    }
    if (!gated && !entry.excluded.empty() &&
        std::find(entry.excluded.begin(), entry.excluded.end(), p) != entry.excluded.end()) {
      std::string list;
      for (u64 e : entry.excluded) list += (list.empty() ? "" : ",") + std::to_string(e);
      skip(out, "requires p not in {" + list + "}");
      gated = true;
    }
    if (!gated && entry.exclusive_min != 0 && p <= entry.exclusive_min) {
      skip(out, "requires p > " + std::to_string(entry.exclusive_min));
      gated = true;
    }
    if (!gated) {
      SplitMix64 rng{derive_seed(cfg.seed, entry.id, p)};
      if (ctx) {
        entry.fn(*ctx, cfg, rng, out);
      } else {
        const PrimeContext local = PrimeContext::build(p, 6 * (p - 1));
        entry.fn(local, cfg, rng, out);
      }
    }
  }

  out.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

void require_odd_prime_arg(u64 p) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("run_check: p must be an odd prime >= 3");
}

}  // namespace

const std::vector<CheckInfo>& list_checks() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> v;
    for (const Entry& e : registry()) v.push_back({e.id, e.statement, e.modulus, e.hypotheses});
    return v;
  }();
  return infos;
}

bool is_check_id(std::string_view id) {
  for (const Entry& e : registry())
    if (e.id == id) return true;
  return false;
}

bool is_conjecture_id(std::string_view id) {
  return id.rfind("CJ", 0) == 0 || id.rfind("ZW", 0) == 0;
}

CheckOutcome run_check(std::string_view id, u64 p, const CheckConfig& cfg) {
  const Entry& entry = find_entry(id);
  require_odd_prime_arg(p);
  return run_entry(entry, p, cfg, nullptr);
}

CheckOutcome run_check(std::string_view id, u64 p, const CheckConfig& cfg, const PrimeContext& ctx) {
  const Entry& entry = find_entry(id);
  require_odd_prime_arg(p);
  if (ctx.p() != p) throw std::invalid_argument("run_check: context prime mismatch");
  return run_entry(entry, p, cfg, &ctx);
}

std::vector<CheckOutcome> run_all(u64 p, const CheckConfig& cfg) {
  require_odd_prime_arg(p);
  const PrimeContext ctx = PrimeContext::build(p, 6 * (p - 1));
  std::vector<CheckOutcome> out;
  out.reserve(registry().size());
  for (const Entry& e : registry()) out.push_back(run_entry(e, p, cfg, &ctx));
  return out;
}

}  // namespace supercong
