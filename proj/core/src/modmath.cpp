#include "supercong/modmath.hpp"

namespace supercong {

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

u64 mod_inv(u64 a, u64 m) {
  a %= m;
  i64 old_r = static_cast<i64>(a), r = static_cast<i64>(m);
  i64 old_s = 1, s = 0;
  while (r != 0) {
    i64 q = old_r / r;
    i64 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw not_invertible(a, m);
  return signed_mod(old_s, m);
}

int jacobi_symbol(i64 a, u64 n) {
  if (n == 0 || n % 2 == 0) throw std::invalid_argument("jacobi_symbol: n must be odd and positive");
  u64 x = signed_mod(a, n), y = n;
  int j = 1;
  while (x != 0) {
    while (x % 2 == 0) {
      x /= 2;
      u64 y8 = y % 8;
      if (y8 == 3 || y8 == 5) j = -j;
    }
    std::swap(x, y);
    if (x % 4 == 3 && y % 4 == 3) j = -j;
    x %= y;
  }
  return y == 1 ? j : 0;
}

int legendre_symbol(i64 a, u64 p) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("legendre_symbol: p must be an odd prime");
  return jacobi_symbol(a, p);
}

std::optional<u64> sqrt_mod(u64 a, u64 p) {
  a %= p;
  if (a == 0) return 0;
  if (legendre_symbol(static_cast<i64>(a), p) != 1) return std::nullopt;
  if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);

  // Tonelli-Shanks.  p - 1 = q * 2^s with q odd.
  u64 q = p - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  u64 z = 2;
  while (legendre_symbol(static_cast<i64>(z), p) != -1) ++z;
  u64 m = s;
  u64 c = powmod(z, q, p);
  u64 t = powmod(a, q, p);
  u64 r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    u64 i = 0, t2 = t;
    while (t2 != 1) {
      t2 = mulmod(t2, t2, p);
      ++i;
    }
    u64 b = powmod(c, u64(1) << (m - i - 1), p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return r;
}

PrimeContext PrimeContext::build(u64 p, u64 n_max) {
  if (p == 2) throw std::invalid_argument("PrimeContext: p = 2 is not supported");
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("PrimeContext: p must be an odd prime");
  if (p >= (u64(1) << 31)) throw std::invalid_argument("PrimeContext: p^2 would overflow the 64-bit residue width");
  if (n_max < 6 * (p - 1)) throw std::invalid_argument("PrimeContext: n_max must be at least 6(p-1)");

  PrimeContext ctx;
  ctx.p_ = p;
  ctx.p2_ = p * p;
  if (p < (u64(1) << 15)) ctx.p4_ = ctx.p2_ * ctx.p2_;

  const u64 p2 = ctx.p2_;
  ctx.fact_units_.resize(n_max + 1);
  ctx.fact_vals_.resize(n_max + 1);
  ctx.fact_units_[0] = 1;
  ctx.fact_vals_[0] = 0;
  for (u64 n = 1; n <= n_max; ++n) {
    u64 t = n;
    u32 v = 0;
    while (t % p == 0) {
      t /= p;
      ++v;
    }
    ctx.fact_units_[n] = mulmod(ctx.fact_units_[n - 1], t % p2, p2);
    ctx.fact_vals_[n] = ctx.fact_vals_[n - 1] + v;
  }

  // Batch inversion of all units: one extended gcd for the whole table.
  ctx.inv_fact_units_.resize(n_max + 1);
  std::vector<u64>& inv = ctx.inv_fact_units_;
  inv[0] = 1;
  u64 acc = 1;
  for (u64 n = 0; n <= n_max; ++n) {
    inv[n] = acc;  // product of units below n, reused in the backward pass
    acc = mulmod(acc, ctx.fact_units_[n], p2);
  }
  acc = mod_inv(acc, p2);
  for (u64 n = n_max + 1; n-- > 0;) {
    u64 prefix = inv[n];
    inv[n] = mulmod(acc, prefix, p2);
    acc = mulmod(acc, ctx.fact_units_[n], p2);
  }
  return ctx;
}

Residue binom_mod(u64 n, u64 k, u64 modulus, const PrimeContext& ctx) {
  if (k > n) throw std::invalid_argument("binom_mod: k > n");
  const u64 p = ctx.p();
  const u64 p2 = ctx.p2();
  if (modulus != p && modulus != p2) {
    if (ctx.p4() && modulus == *ctx.p4()) {
      // Direct product path mod p^4; only binomials free of p-factors
      // (n < p) can be formed from unit arithmetic at this precision.
      if (n >= p) throw std::invalid_argument("binom_mod: mod p^4 requires n < p");
      const u64 p4 = modulus;
      u64 num = 1, den = 1;
      for (u64 i = 1; i <= k; ++i) {
        num = mulmod(num, (n - k + i) % p4, p4);
        den = mulmod(den, i % p4, p4);
      }
      return {mulmod(num, mod_inv(den, p4), p4), p4};
    }
    throw std::invalid_argument("binom_mod: modulus must be p, p^2 or p^4 of the context");
  }
  if (n > ctx.n_max()) throw std::invalid_argument("binom_mod: n beyond tabulated range");

  const u32 e = ctx.fact_val(n) - ctx.fact_val(k) - ctx.fact_val(n - k);
  const u32 width = modulus == p ? 1 : 2;
  if (e >= width) return {0, modulus};
  u64 unit = mulmod(ctx.fact_unit(n), mulmod(ctx.inv_fact_unit(k), ctx.inv_fact_unit(n - k), p2), p2);
  if (e == 1) return {mulmod(unit % p, p, modulus), modulus};  // p * (unit ratio mod p)
  return {unit % modulus, modulus};
}

std::pair<Residue, Residue> odd_harmonic_sums(u64 k, const PrimeContext& ctx, u64 modulus) {
  const u64 p = ctx.p();
  if (modulus != p && modulus != ctx.p2())
    throw std::invalid_argument("odd_harmonic_sums: modulus must be p or p^2");
  u64 s1 = 0, s2 = 0;
  for (u64 i = 1; i <= k; ++i) {
    const u64 d = 2 * i - 1;
    if (d % p == 0) throw not_invertible(d, modulus);
    if (d >= p) {
      const u64 inv = mod_inv(d % modulus, modulus);
      s1 = addmod(s1, inv, modulus);
      s2 = addmod(s2, mulmod(inv, inv, modulus), modulus);
    } else {
      const u64 inv = ctx.inv_below_p(d) % modulus;
      s1 = addmod(s1, inv, modulus);
      s2 = addmod(s2, mulmod(inv, inv, modulus), modulus);
    }
  }
  return {Residue{s1, modulus}, Residue{s2, modulus}};
}

}  // namespace supercong
