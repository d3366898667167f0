#include "supercong/legendre_poly.hpp"

namespace supercong {

namespace {

void require_modulus(const PrimeContext& ctx, u64 modulus) {
  if (modulus != ctx.p() && modulus != ctx.p2())
    throw std::invalid_argument("legendre_poly: modulus must be p or p^2");
}

}  // namespace

Residue legendre_eval_recurrence(u64 n, Residue x, const PrimeContext& ctx, u64 modulus) {
  require_modulus(ctx, modulus);
  if (n >= ctx.p()) throw std::invalid_argument("legendre_eval_recurrence: n must be < p");
  const u64 xv = x.value % modulus;
  if (n == 0) return {1 % modulus, modulus};
  if (n == 1) return {xv, modulus};
  u64 prev = 1 % modulus, cur = xv;
  for (u64 k = 1; k < n; ++k) {
    u64 t = mulmod(mulmod((2 * k + 1) % modulus, xv, modulus), cur, modulus);
    t = submod(t, mulmod(k % modulus, prev, modulus), modulus);
    u64 next = mulmod(t, ctx.inv_below_p(k + 1) % modulus, modulus);
    prev = cur;
    cur = next;
  }
  return {cur, modulus};
}

Residue legendre_eval_murphy(u64 n, Residue x, const PrimeContext& ctx, u64 modulus) {
  require_modulus(ctx, modulus);
  if (2 * n > ctx.p() - 1) throw std::invalid_argument("legendre_eval_murphy: n must be <= (p-1)/2");
  const u64 half = (modulus + 1) / 2;  // 1/2 mod an odd modulus
  const u64 h = mulmod(submod(x.value % modulus, 1 % modulus, modulus), half, modulus);
  u64 acc = 0, hk = 1 % modulus;
  for (u64 k = 0; k <= n; ++k) {
    u64 term = mulmod(binom_mod(n, k, modulus, ctx).value, binom_mod(n + k, k, modulus, ctx).value, modulus);
    acc = addmod(acc, mulmod(term, hk, modulus), modulus);
    hk = mulmod(hk, h, modulus);
  }
  return {acc, modulus};
}

Residue legendre_at_zero(u64 n, const PrimeContext& ctx, u64 modulus) {
  require_modulus(ctx, modulus);
  if (n % 2 == 1) return {0, modulus};
  const u64 m = n / 2;
  u64 v = binom_mod(n, m, modulus, ctx).value;
  v = mulmod(v, mod_inv(powmod(4, m, modulus), modulus), modulus);
  if (m % 2 == 1) v = submod(0, v, modulus);
  return {v, modulus};
}

mpq_class legendre_eval_exact(u64 n, const mpq_class& x) {
  if (n > 200) throw std::invalid_argument("legendre_eval_exact: n > 200");
  // P_n(x) = 2^-n sum_{k<=n/2} (-1)^k (2n-2k)! / (k! (n-k)! (n-2k)!) x^(n-2k)
  mpq_class sum = 0;
  mpz_class num, den;
  for (u64 k = 0; 2 * k <= n; ++k) {
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(2 * n - 2 * k));
    mpz_class d1, d2, d3;
    mpz_fac_ui(d1.get_mpz_t(), static_cast<unsigned long>(k));
    mpz_fac_ui(d2.get_mpz_t(), static_cast<unsigned long>(n - k));
    mpz_fac_ui(d3.get_mpz_t(), static_cast<unsigned long>(n - 2 * k));
    den = d1 * d2 * d3;
    mpq_class coeff(num, den);
    coeff.canonicalize();
    if (k % 2 == 1) coeff = -coeff;
    mpq_class xp = 1;
    for (u64 i = 0; i < n - 2 * k; ++i) xp *= x;
    sum += coeff * xp;
  }
  mpq_class scale(1, 1);
  mpz_ui_pow_ui(scale.get_den().get_mpz_t(), 2, static_cast<unsigned long>(n));
  sum *= scale;
  sum.canonicalize();
  return sum;
}

}  // namespace supercong
