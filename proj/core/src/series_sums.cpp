#include "supercong/series_sums.hpp"

#include <array>

namespace supercong {

namespace {

using i32 = std::int32_t;

struct FactorPower {
  u32 mult;  // argument multiplier: (mult * k)!
  i32 exp;   // signed exponent
};

// term(k) = prod (mult*k)!^exp over the family's shape.
struct Shape {
  std::array<FactorPower, 3> factors;
  u32 count;
  u32 span;  // largest mult, for the table-range precondition
};

const Shape& shape_of(TermFamily family) {
  static const Shape shapes[] = {
      {{{{2, 2}, {1, -4}, {0, 0}}}, 2, 2},   // CentralSq
      {{{{2, 3}, {1, -6}, {0, 0}}}, 2, 2},   // CentralCube
      {{{{2, 4}, {1, -8}, {0, 0}}}, 2, 2},   // CentralFourth
      {{{{3, 1}, {1, -3}, {0, 0}}}, 2, 3},   // ThreeK
      {{{{4, 1}, {1, -4}, {0, 0}}}, 2, 4},   // FourK
      {{{{6, 1}, {3, -1}, {1, -3}}}, 3, 6},  // SixK
      {{{{3, 1}, {2, 1}, {1, -5}}}, 3, 3},   // CentralSq3k
      {{{{4, 2}, {2, -4}, {0, 0}}}, 2, 4},   // Quarter
  };
  return shapes[static_cast<int>(family)];
}

}  // namespace

FactorialDecomp series_term(TermFamily family, u64 k, const PrimeContext& ctx) {
  const Shape& s = shape_of(family);
  const u64 p2 = ctx.p2();
  if (s.span * k > ctx.n_max()) throw std::invalid_argument("series_term: k beyond tabulated range");
  u64 unit = 1;
  i64 val = 0;
  for (u32 i = 0; i < s.count; ++i) {
    const u64 n = u64(s.factors[i].mult) * k;
    const i32 e = s.factors[i].exp;
    const u64 u = e > 0 ? ctx.fact_unit(n) : ctx.inv_fact_unit(n);
    for (i32 j = 0; j < (e > 0 ? e : -e); ++j) unit = mulmod(unit, u, p2);
    val += i64(e) * ctx.fact_val(n);
  }
  if (val < 0) throw std::logic_error("series_term: negative valuation");
  return {unit, static_cast<u32>(val)};
}

Residue series_sum_at(TermFamily family, Residue ratio, Weight weight, u64 upper, u64 modulus,
                      const PrimeContext& ctx) {
  const u64 p = ctx.p();
  const u64 p2 = ctx.p2();
  if (modulus != p && modulus != p2) throw std::invalid_argument("series_sum_at: modulus must be p or p^2");
  if (upper > p - 1) throw std::invalid_argument("series_sum_at: upper must be <= p-1");
  const u32 width = modulus == p ? 1 : 2;
  const u64 z = ratio.value % modulus;

  u64 acc = 0, zk = 1 % modulus;
  for (u64 k = 0; k <= upper; ++k) {
    const FactorialDecomp t = series_term(family, k, ctx);
    if (t.val < width) {
      u64 w = 0;
      switch (weight.kind) {
        case Weight::Kind::One:
          w = 1 % modulus;
          break;
        case Weight::Kind::LinearK:
          w = k % modulus;
          break;
        case Weight::Kind::Falling:
          // k(k-1)...(k-r+1) = k!/(k-r)!; k < p so the units carry it exactly.
          w = k < weight.order
                  ? 0
                  : mulmod(ctx.fact_unit(k), ctx.inv_fact_unit(k - weight.order), p2) % modulus;
          break;
      }
      u64 term = mulmod(mulmod(t.unit % modulus, zk, modulus), w, modulus);
      if (t.val == 1) term = mulmod(term % p, p, modulus);  // p * (unit part mod p)
      acc = addmod(acc, term, modulus);
    }
    zk = mulmod(zk, z, modulus);
  }
  return {acc, modulus};
}

Residue series_sum(TermFamily family, i64 constant, Weight weight, u64 upper, u64 modulus,
                   const PrimeContext& ctx) {
  if (constant == 0) throw std::invalid_argument("series_sum: constant must be nonzero");
  const u64 c = signed_mod(constant, modulus);
  if (c % ctx.p() == 0) throw not_invertible(c, modulus);
  return series_sum_at(family, {mod_inv(c, modulus), modulus}, weight, upper, modulus, ctx);
}

Residue apery_half(const PrimeContext& ctx) {
  const u64 p2 = ctx.p2();
  const u64 n = (ctx.p() - 1) / 2;
  if (ctx.n_max() < n + n) throw std::invalid_argument("apery_half: tables too small");
  u64 acc = 0;
  const u64 inv_n_fact = ctx.inv_fact_unit(n);
  for (u64 k = 0; k <= n; ++k) {
    // C(n+k,k) C(n,k); all arguments < p, valuations vanish.
    u64 b = mulmod(ctx.fact_unit(n + k), mulmod(ctx.inv_fact_unit(k), inv_n_fact, p2), p2);
    b = mulmod(b, mulmod(ctx.fact_unit(n), mulmod(ctx.inv_fact_unit(k), ctx.inv_fact_unit(n - k), p2), p2), p2);
    acc = addmod(acc, mulmod(b, b, p2), p2);
  }
  return {acc, p2};
}

mpz_class kelisky_lhs_exact(u64 n, i64 x) {
  if (n > 200) throw std::invalid_argument("kelisky_lhs_exact: n > 200");
  if (x == 0) throw std::invalid_argument("kelisky_lhs_exact: x must be nonzero");
  mpz_class sum = 0, b1, b2, xp;
  mpz_class x2 = mpz_class(x) * x;
  xp = 1;
  for (u64 k = 0; k <= n; ++k) {
    mpz_bin_uiui(b1.get_mpz_t(), static_cast<unsigned long>(2 * n - 2 * k), static_cast<unsigned long>(n - k));
    mpz_bin_uiui(b2.get_mpz_t(), static_cast<unsigned long>(2 * k), static_cast<unsigned long>(k));
    sum += b1 * b2 * xp;
    xp *= x2;
  }
  return sum;
}

}  // namespace supercong
