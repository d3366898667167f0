#include <doctest.h>

#include "oracles.hpp"
#include "supercong/legendre_poly.hpp"
#include "supercong/series_sums.hpp"

using namespace supercong;

TEST_CASE("recurrence seeds and the P2(0) example") {
  const PrimeContext ctx = PrimeContext::build(5, 30);
  CHECK(legendre_eval_recurrence(0, {4, 25}, ctx, 25).value == 1);
  CHECK(legendre_eval_recurrence(1, {4, 25}, ctx, 25).value == 4);
  // P2(0) = -1/2 = 12 (mod 25)
  CHECK(legendre_eval_recurrence(2, {0, 25}, ctx, 25).value == 12);
  CHECK_THROWS_AS(legendre_eval_recurrence(5, {0, 25}, ctx, 25), std::invalid_argument);
}

TEST_CASE("murphy expansion examples") {
  const PrimeContext ctx = PrimeContext::build(5, 30);
  CHECK(legendre_eval_murphy(2, {3, 25}, ctx, 25).value == 13);  // P2(3) = 13
  CHECK(legendre_eval_murphy(2, {1, 25}, ctx, 25).value == 1);   // P_n(1) = 1
  CHECK(legendre_eval_murphy(1, {1, 25}, ctx, 25).value == 1);
  CHECK(legendre_eval_murphy(2, {0, 25}, ctx, 25).value == 12);  // matches the recurrence
}

TEST_CASE("recurrence agrees with murphy mod p^2 at n = (p-1)/2") {
  for (u64 p : {3, 5, 7, 11, 13, 31}) {
    const PrimeContext ctx = PrimeContext::build(p, 6 * (p - 1));
    const u64 p2 = ctx.p2();
    for (u64 x = 0; x < p; ++x) {
      CHECK(legendre_eval_recurrence((p - 1) / 2, {x, p2}, ctx, p2).value ==
            legendre_eval_murphy((p - 1) / 2, {x, p2}, ctx, p2).value);
    }
  }
}

TEST_CASE("parity and endpoint identities mod p^2") {
  for (u64 p : {5, 13, 31}) {
    const PrimeContext ctx = PrimeContext::build(p, 6 * (p - 1));
    const u64 p2 = ctx.p2();
    for (u64 n = 0; n < p; ++n) {
      CHECK(legendre_eval_recurrence(n, {1, p2}, ctx, p2).value == 1);
      const u64 at_m1 = legendre_eval_recurrence(n, {p2 - 1, p2}, ctx, p2).value;
      CHECK(at_m1 == (n % 2 == 0 ? 1 : p2 - 1));
      for (u64 x = 1; x < p; ++x) {
        const u64 plus = legendre_eval_recurrence(n, {x, p2}, ctx, p2).value;
        const u64 minus = legendre_eval_recurrence(n, {p2 - x, p2}, ctx, p2).value;
        CHECK(minus == (n % 2 == 0 ? plus : submod(0, plus, p2)));
      }
    }
  }
}

TEST_CASE("closed form at zero") {
  const PrimeContext ctx = PrimeContext::build(5, 30);
  CHECK(legendre_at_zero(3, ctx, 25).value == 0);  // odd index
  CHECK(legendre_at_zero(2, ctx, 25).value == 12);
  CHECK(legendre_at_zero(0, ctx, 25).value == 1);
  for (u64 p : {7, 13}) {
    const PrimeContext c = PrimeContext::build(p, 6 * (p - 1));
    for (u64 n = 0; n <= (p - 1) / 2; ++n)
      CHECK(legendre_at_zero(n, c, p * p).value ==
            legendre_eval_recurrence(n, {0, p * p}, c, p * p).value);
  }
}

TEST_CASE("exact evaluation examples") {
  CHECK(legendre_eval_exact(2, 3) == 13);  // (3*9 - 1)/2
  CHECK(legendre_eval_exact(3, 3) == 63);  // (5*27 - 9)/2
  CHECK(legendre_eval_exact(17, 1) == 1);
  CHECK(legendre_eval_exact(4, mpq_class(1, 2)) == mpq_class(-37, 128));
  CHECK_THROWS_AS(legendre_eval_exact(201, 1), std::invalid_argument);
}

TEST_CASE("exact values have power-of-two denominators and reduce to the modular path") {
  oracle::SplitMix64 rng{12345};
  const PrimeContext ctx = PrimeContext::build(101, 600);
  const u64 p2 = ctx.p2();
  for (int i = 0; i < 40; ++i) {
    const u64 n = rng.below(50);
    const i64 x = static_cast<i64>(rng.below(19)) - 9;
    const mpq_class exact = legendre_eval_exact(n, x);
    mpz_class den = exact.get_den();
    while (den % 2 == 0) den /= 2;
    CHECK(den == 1);
    const u64 expected = oracle::rational_mod(exact, p2);
    CHECK(legendre_eval_recurrence(n, {signed_mod(x, p2), p2}, ctx, p2).value == expected);
  }
}

TEST_CASE("identity: P_(p-1)/2 equals the central-square series in (1-x)/2") {
  for (u64 p : {5, 7, 13, 29}) {
    const PrimeContext ctx = PrimeContext::build(p, 6 * (p - 1));
    const u64 p2 = ctx.p2();
    const u64 half = (p2 + 1) / 2;
    for (u64 x = 0; x < p; ++x) {
      const u64 lhs = legendre_eval_recurrence((p - 1) / 2, {x, p2}, ctx, p2).value;
      const Residue ratio{mulmod(submod(1, x, p2), mulmod(half, mod_inv(16, p2), p2), p2), p2};
      const u64 rhs =
          series_sum_at(TermFamily::CentralSq, ratio, Weight::one(), (p - 1) / 2, p2, ctx).value;
      CHECK(lhs == rhs);
    }
  }
}
