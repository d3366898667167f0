#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "supercong/modmath.hpp"

using namespace supercong;

TEST_CASE("build_context example values") {
  const PrimeContext ctx = PrimeContext::build(5, 30);
  CHECK(ctx.p2() == 25);
  REQUIRE(ctx.p4().has_value());
  CHECK(*ctx.p4() == 625);
  // 5! = 120 = 5 * 24
  CHECK(ctx.fact_val(5) == 1);
  CHECK(ctx.fact_unit(5) == 24);
  // 10! = 3628800 = 5^2 * 145152, 145152 mod 25 = 2
  CHECK(ctx.fact_val(10) == 2);
  CHECK(ctx.fact_unit(10) == 2);
  // empty product
  CHECK(ctx.fact_val(0) == 0);
  CHECK(ctx.fact_unit(0) == 1);
}

TEST_CASE("build_context rejects bad arguments") {
  CHECK_THROWS_AS(PrimeContext::build(2, 100), std::invalid_argument);
  CHECK_THROWS_AS(PrimeContext::build(9973, 10), std::invalid_argument);  // n_max < 6(p-1)
  CHECK_THROWS_AS(PrimeContext::build(u64(1) << 31 | 1, u64(6) << 31), std::invalid_argument);
}

TEST_CASE("factorial reconstruction against arbitrary precision") {
  // p^val * unit == n! (mod p^2) for n <= 2000
  for (u64 p : {3, 5, 7, 11, 13, 101}) {
    const u64 n_max = std::max<u64>(2000, 6 * (p - 1));
    const PrimeContext ctx = PrimeContext::build(p, n_max);
    const u64 p2 = ctx.p2();
    mpz_class f = 1;
    for (u64 n = 0; n <= 2000; ++n) {
      if (n > 0) f *= static_cast<unsigned long>(n);
      const u64 expected = oracle::mod_u64(f, p2);
      const FactorialDecomp d = ctx.factorial(n);
      CHECK(mulmod(powmod(p, d.val, p2), d.unit, p2) == expected);
      CHECK(mulmod(d.unit, ctx.inv_fact_unit(n), p2) == 1);
    }
  }
}

TEST_CASE("fact_vals increments by the valuation of n") {
  const PrimeContext ctx = PrimeContext::build(7, 2000);
  for (u64 n = 1; n <= 2000; ++n) {
    u32 v = 0;
    for (u64 t = n; t % 7 == 0; t /= 7) ++v;
    CHECK(ctx.fact_val(n) == ctx.fact_val(n - 1) + v);
  }
}

TEST_CASE("legendre_symbol examples and Euler criterion") {
  CHECK(legendre_symbol(1, 97) == 1);
  CHECK(legendre_symbol(2, 7) == 1);   // 2^3 = 8 = 1 (mod 7)
  CHECK(legendre_symbol(3, 7) == -1);  // 3^3 = 27 = -1 (mod 7)
  CHECK(legendre_symbol(14, 7) == 0);
  for (u64 p : {3, 5, 7, 13, 101, 499}) {
    for (i64 a = -30; a <= 30; ++a) {
      const int sym = legendre_symbol(a, p);
      const u64 euler = powmod(signed_mod(a, p), (p - 1) / 2, p);
      if (sym == 0) CHECK(euler == 0);
      else CHECK(euler == (sym == 1 ? 1 : p - 1));
    }
  }
}

TEST_CASE("legendre_symbol is completely multiplicative") {
  oracle::SplitMix64 rng{20240817};
  for (u64 p : {5, 13, 101, 997}) {
    for (int i = 0; i < 200; ++i) {
      const i64 a = static_cast<i64>(rng.below(4 * p)) - static_cast<i64>(2 * p);
      const i64 b = static_cast<i64>(rng.below(4 * p)) - static_cast<i64>(2 * p);
      CHECK(legendre_symbol(a * b, p) == legendre_symbol(a, p) * legendre_symbol(b, p));
    }
  }
}

TEST_CASE("jacobi symbol factors over the denominator") {
  for (i64 a = -20; a <= 20; ++a) {
    CHECK(jacobi_symbol(a, 33) == legendre_symbol(a, 3) * legendre_symbol(a, 11));
    CHECK(jacobi_symbol(a, 15) == legendre_symbol(a, 3) * legendre_symbol(a, 5));
  }
}

TEST_CASE("mod_inv examples and failure") {
  CHECK(mod_inv(4, 25) == 19);
  CHECK(mod_inv(1, 77) == 1);
  CHECK(mod_inv(2, 9) == 5);
  CHECK_THROWS_AS(mod_inv(6, 9), not_invertible);
  oracle::SplitMix64 rng{7};
  for (u64 m : {9ULL, 25ULL, 2401ULL, 9409ULL}) {
    for (int i = 0; i < 50; ++i) {
      u64 a = 1 + rng.below(m - 1);
      while (std::gcd(a, m) != 1) a = 1 + rng.below(m - 1);
      CHECK(mulmod(a, mod_inv(a, m), m) == 1);
    }
  }
}

TEST_CASE("binom_mod examples") {
  const PrimeContext ctx = PrimeContext::build(5, 30);
  CHECK(binom_mod(4, 2, 25, ctx).value == 6);
  CHECK(binom_mod(10, 5, 25, ctx).value == 2);   // 252 mod 25
  CHECK(binom_mod(6, 3, 25, ctx).value == 20);   // C(6,3) = 20, valuation 1
  CHECK_THROWS_AS(binom_mod(3, 4, 25, ctx), std::invalid_argument);
  CHECK_THROWS_AS(binom_mod(31, 2, 25, ctx), std::invalid_argument);
}

TEST_CASE("binom_mod against big-integer binomials") {
  oracle::SplitMix64 rng{99};
  for (u64 p : {5, 13, 101}) {
    const PrimeContext ctx = PrimeContext::build(p, std::max<u64>(6 * (p - 1), 400));
    for (int i = 0; i < 300; ++i) {
      const u64 n = rng.below(400);
      const u64 k = n == 0 ? 0 : rng.below(n + 1);
      const mpz_class b = oracle::binom(n, k);
      CHECK(binom_mod(n, k, p, ctx).value == oracle::mod_u64(b, p));
      CHECK(binom_mod(n, k, p * p, ctx).value == oracle::mod_u64(b, p * p));
    }
  }
}

TEST_CASE("binom_mod mod p^4 for p-free binomials") {
  const PrimeContext ctx = PrimeContext::build(13, 100);
  const u64 p4 = *ctx.p4();
  for (u64 n = 0; n < 13; ++n)
    for (u64 k = 0; k <= n; ++k)
      CHECK(binom_mod(n, k, p4, ctx).value == oracle::mod_u64(oracle::binom(n, k), p4));
  CHECK_THROWS_AS(binom_mod(14, 2, p4, ctx), std::invalid_argument);
}

TEST_CASE("odd_harmonic_sums examples") {
  const PrimeContext ctx7 = PrimeContext::build(7, 42);
  auto [h0, h0sq] = odd_harmonic_sums(0, ctx7, 7);
  CHECK(h0.value == 0);
  CHECK(h0sq.value == 0);
  auto [h1, h1sq] = odd_harmonic_sums(1, ctx7, 7);
  CHECK(h1.value == 1);
  CHECK(h1sq.value == 1);
  // 1 + 1/3 = 6, 1 + 1/9 = 5 (mod 7)
  auto [h2, h2sq] = odd_harmonic_sums(2, ctx7, 7);
  CHECK(h2.value == 6);
  CHECK(h2sq.value == 5);
  CHECK_THROWS_AS(odd_harmonic_sums(4, ctx7, 7), not_invertible);  // hits 2*4-1 = 7
}

TEST_CASE("odd_harmonic_sums against exact rationals") {
  for (u64 p : {11, 31}) {
    const PrimeContext ctx = PrimeContext::build(p, 6 * (p - 1));
    const u64 p2 = ctx.p2();
    mpq_class s1 = 0, s2 = 0;
    for (u64 k = 1; 2 * k - 1 < p; ++k) {
      mpq_class inv(1, static_cast<unsigned long>(2 * k - 1));
      s1 += inv;
      s2 += inv * inv;
      auto [a, b] = odd_harmonic_sums(k, ctx, p2);
      CHECK(a.value == oracle::rational_mod(s1, p2));
      CHECK(b.value == oracle::rational_mod(s2, p2));
    }
  }
}

TEST_CASE("sqrt_mod finds square roots exactly for residues") {
  for (u64 p : {3, 5, 13, 17, 97, 577, 40961}) {  // includes p = 1 (mod 2^k) Tonelli paths
    for (u64 a = 0; a < std::min<u64>(p, 60); ++a) {
      const auto r = sqrt_mod(a, p);
      if (legendre_symbol(static_cast<i64>(a), p) == -1) {
        CHECK(!r.has_value());
      } else {
        REQUIRE(r.has_value());
        CHECK(mulmod(*r, *r, p) == a % p);
      }
    }
  }
}
