#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace supercong {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

// A congruence class: value reduced into [0, modulus).
struct Residue {
  u64 value = 0;
  u64 modulus = 0;
  friend bool operator==(const Residue&, const Residue&) = default;
};

// n! written exactly as p^val * unit with gcd(unit, p) = 1, unit reduced
// mod p^2.  Keeping the p-power separate is what lets factorials that are
// divisible by p (e.g. (6k)! for 6k >= p) stay usable modulo p^2.
struct FactorialDecomp {
  u64 unit = 1;
  u32 val = 0;
};

class not_invertible : public std::domain_error {
 public:
  not_invertible(u64 value, u64 modulus)
      : std::domain_error("value " + std::to_string(value) +
                          " is not invertible mod " + std::to_string(modulus)),
        value(value),
        modulus(modulus) {}
  u64 value;
  u64 modulus;
};

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

inline u64 addmod(u64 a, u64 b, u64 m) {
  u64 s = a + b;  // a, b < m < 2^62, no overflow
  return s >= m ? s - m : s;
}

inline u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + m - b; }

// Canonical representative of a possibly negative integer.
inline u64 signed_mod(i64 a, u64 m) {
  i64 r = a % static_cast<i64>(m);
  return r < 0 ? static_cast<u64>(r + static_cast<i64>(m)) : static_cast<u64>(r);
}

u64 powmod(u64 base, u64 exp, u64 m);

// Inverse of a mod m via extended gcd; works for any modulus (p, p^2, p^4).
// Throws not_invertible when gcd(a, m) > 1.
u64 mod_inv(u64 a, u64 m);

// Legendre symbol (a | p) for odd prime p: 0 if p | a, else +-1.
int legendre_symbol(i64 a, u64 p);

// Jacobi symbol (a | n) for odd n >= 1.
int jacobi_symbol(i64 a, u64 n);

// A square root of a mod odd prime p, if a is a quadratic residue.
std::optional<u64> sqrt_mod(u64 a, u64 p);

// The environment every modular computation runs in: an odd prime p with
// factorial unit/valuation tables large enough for (6k)! with k <= p-1.
// Immutable after construction; safe to share across threads.
class PrimeContext {
 public:
  // Builds tables for 0..n_max.  Requires p an odd prime (primality is the
  // caller's responsibility), p < 2^31 so p^2 fits u64, n_max >= 6(p-1).
  static PrimeContext build(u64 p, u64 n_max);

  u64 p() const { return p_; }
  u64 p2() const { return p2_; }
  std::optional<u64> p4() const { return p4_; }
  u64 n_max() const { return fact_units_.size() - 1; }

  FactorialDecomp factorial(u64 n) const {
    check_index(n);
    return {fact_units_[n], fact_vals_[n]};
  }
  u64 fact_unit(u64 n) const { check_index(n); return fact_units_[n]; }
  u32 fact_val(u64 n) const { check_index(n); return fact_vals_[n]; }
  u64 inv_fact_unit(u64 n) const { check_index(n); return inv_fact_units_[n]; }

  // Inverse of k mod p^2 for 1 <= k < p, via the unit tables (k = k!/(k-1)!).
  u64 inv_below_p(u64 k) const {
    if (k == 0 || k >= p_) throw std::invalid_argument("inv_below_p: need 1 <= k < p");
    return mulmod(inv_fact_units_[k], fact_units_[k - 1], p2_);
  }

  bool is_supported_modulus(u64 m) const { return m == p_ || m == p2_ || (p4_ && m == *p4_); }

 private:
  PrimeContext() = default;
  void check_index(u64 n) const {
    if (n >= fact_units_.size())
      throw std::out_of_range("factorial index " + std::to_string(n) + " beyond tabulated range");
  }

  u64 p_ = 0;
  u64 p2_ = 0;
  std::optional<u64> p4_;
  std::vector<u64> fact_units_;      // unit part of n! mod p^2
  std::vector<u32> fact_vals_;       // p-adic valuation of n!
  std::vector<u64> inv_fact_units_;  // inverses of the units mod p^2
};

// C(n, k) reduced mod `modulus`, which must be p or p^2 (or p^4 when the
// context carries it and the binomial involves no factor of p, i.e. n < p).
Residue binom_mod(u64 n, u64 k, u64 modulus, const PrimeContext& ctx);

// (sum 1/(2i-1), sum 1/(2i-1)^2) for i = 1..k, mod p or p^2.
// Requires every denominator coprime to p.
std::pair<Residue, Residue> odd_harmonic_sums(u64 k, const PrimeContext& ctx, u64 modulus);

}  // namespace supercong
