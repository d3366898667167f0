#pragma once

#include <gmpxx.h>

#include "supercong/modmath.hpp"

namespace supercong {

// The summand shapes appearing in the truncated series under test.  Every
// family's term is a nonnegative integer for all k, so it carries a
// well-defined p-adic valuation.
enum class TermFamily {
  CentralSq,      // C(2k,k)^2
  CentralCube,    // C(2k,k)^3
  CentralFourth,  // C(2k,k)^4
  ThreeK,         // (3k)! / k!^3
  FourK,          // (4k)! / k!^4
  SixK,           // (6k)! / ((3k)! k!^3)
  CentralSq3k,    // C(2k,k)^2 C(3k,k)
  Quarter,        // C(4k,2k)^2
};

// Polynomial weight applied to each term.
struct Weight {
  enum class Kind { One, Falling, LinearK };
  Kind kind = Kind::One;
  u32 order = 0;  // r of the falling factorial k(k-1)...(k-r+1)

  static Weight one() { return {Kind::One, 0}; }
  static Weight falling(u32 r) {
    if (r == 0) throw std::invalid_argument("Weight::falling: r must be >= 1");
    return {Kind::Falling, r};
  }
  static Weight linear_k() { return {Kind::LinearK, 1}; }
};

// term(k) of the family as p^val * unit (unit mod p^2).
FactorialDecomp series_term(TermFamily family, u64 k, const PrimeContext& ctx);

// sum_{k=0}^{upper} weight(k) * term(k) * ratio^k  mod p or p^2.
Residue series_sum_at(TermFamily family, Residue ratio, Weight weight, u64 upper, u64 modulus,
                      const PrimeContext& ctx);

// sum_{k=0}^{upper} weight(k) * term(k) * constant^-k.  The constant may be
// negative; it is canonicalized mod the working modulus before inversion.
// Throws not_invertible when p divides it.
Residue series_sum(TermFamily family, i64 constant, Weight weight, u64 upper, u64 modulus,
                   const PrimeContext& ctx);

// A((p-1)/2) mod p^2, A(n) = sum_k C(n+k,k)^2 C(n,k)^2.
Residue apery_half(const PrimeContext& ctx);

// sum_{k=0}^{n} C(2n-2k, n-k) C(2k,k) x^(2k), exact.  Guarded to n <= 200.
mpz_class kelisky_lhs_exact(u64 n, i64 x);

}  // namespace supercong
