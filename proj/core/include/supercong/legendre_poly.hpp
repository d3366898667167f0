#pragma once

#include <gmpxx.h>

#include "supercong/modmath.hpp"

namespace supercong {

// P_n(x) mod p or p^2 by the three-term recurrence
// (n+1) P_{n+1} = (2n+1) x P_n - n P_{n-1}.  Requires n < p so every
// divisor is invertible.
Residue legendre_eval_recurrence(u64 n, Residue x, const PrimeContext& ctx, u64 modulus);

// P_n(x) = sum_k C(n,k) C(n+k,k) ((x-1)/2)^k.  Requires n <= (p-1)/2 so the
// binomials stay within the tabulated, p-free range.
Residue legendre_eval_murphy(u64 n, Residue x, const PrimeContext& ctx, u64 modulus);

// Closed form at the origin: P_{2m+1}(0) = 0, P_{2m}(0) = (-1)^m C(2m,m) / 4^m.
Residue legendre_at_zero(u64 n, const PrimeContext& ctx, u64 modulus);

// Exact rational value of P_n(x); denominators stay powers of two.
// Guarded to n <= 200.
mpq_class legendre_eval_exact(u64 n, const mpq_class& x);

}  // namespace supercong
