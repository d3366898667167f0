// Test-only oracles: exact big-integer / rational routes independent of the
// table-driven kernels they check.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "supercong/qseries.hpp"
#include "supercong/series_sums.hpp"

namespace oracle {

using supercong::u32;
using supercong::u64;
using supercong::i64;

inline mpz_class fact(u64 n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

inline mpz_class binom(u64 n, u64 k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline u64 mod_u64(const mpz_class& z, u64 m) {
  return mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(m));
}

// num/den mod m for den coprime to m.
inline u64 rational_mod(const mpq_class& q, u64 m) {
  const u64 num = mod_u64(mpz_class(q.get_num()), m);
  const u64 den = mod_u64(mpz_class(q.get_den()), m);
  return supercong::mulmod(num, supercong::mod_inv(den, m), m);
}

inline mpz_class term_exact(supercong::TermFamily family, u64 k) {
  using supercong::TermFamily;
  switch (family) {
    case TermFamily::CentralSq: return binom(2 * k, k) * binom(2 * k, k);
    case TermFamily::CentralCube: return binom(2 * k, k) * binom(2 * k, k) * binom(2 * k, k);
    case TermFamily::CentralFourth: {
      mpz_class b = binom(2 * k, k);
      return b * b * b * b;
    }
    case TermFamily::ThreeK: return fact(3 * k) / (fact(k) * fact(k) * fact(k));
    case TermFamily::FourK: return fact(4 * k) / (fact(k) * fact(k) * fact(k) * fact(k));
    case TermFamily::SixK: return fact(6 * k) / (fact(3 * k) * fact(k) * fact(k) * fact(k));
    case TermFamily::CentralSq3k: return binom(2 * k, k) * binom(2 * k, k) * binom(3 * k, k);
    case TermFamily::Quarter: return binom(4 * k, 2 * k) * binom(4 * k, 2 * k);
  }
  throw std::logic_error("term_exact: bad family");
}

inline mpz_class weight_exact(supercong::Weight w, u64 k) {
  using Kind = supercong::Weight::Kind;
  switch (w.kind) {
    case Kind::One: return 1;
    case Kind::LinearK: return mpz_class(static_cast<unsigned long>(k));
    case Kind::Falling: {
      if (k < w.order) return 0;
      mpz_class r = 1;
      for (u64 i = 0; i < w.order; ++i) r *= mpz_class(static_cast<unsigned long>(k - i));
      return r;
    }
  }
  throw std::logic_error("weight_exact: bad weight");
}

// sum_{k=0}^{upper} weight(k) term(k) / constant^k as an exact rational.
inline mpq_class series_exact(supercong::TermFamily family, i64 constant, supercong::Weight w,
                              u64 upper) {
  mpq_class sum = 0;
  mpz_class ck = 1;
  for (u64 k = 0; k <= upper; ++k) {
    mpq_class term(weight_exact(w, k) * term_exact(family, k), ck);
    term.canonicalize();
    sum += term;
    ck *= constant;
  }
  sum.canonicalize();
  return sum;
}

inline mpz_class apery_exact(u64 n) {
  mpz_class sum = 0;
  for (u64 k = 0; k <= n; ++k) {
    const mpz_class a = binom(n + k, k), b = binom(n, k);
    sum += a * a * b * b;
  }
  return sum;
}

// Second-order eta oracle: builds each (1-q^m)^e as a dense polynomial by
// repeated multiplication and folds the factors in reverse order.
inline std::vector<mpz_class> eta_expand_reference(const supercong::EtaProductSpec& spec) {
  const u64 n = spec.truncation;
  std::vector<mpz_class> acc(n + 1, 0);
  acc[spec.leading_power] = 1;
  std::vector<std::pair<u64, u32>> pieces;  // (m, e) with m = period * j <= n
  for (const supercong::EtaFactor& f : spec.factors)
    for (u64 m = f.period; m <= n; m += f.period) pieces.emplace_back(m, f.exponent);
  for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) {
    // dense (1 - q^m)^e via binomial coefficients
    std::vector<mpz_class> pow;
    for (u64 j = 0; j * it->first <= n && j <= it->second; ++j) {
      mpz_class c = binom(it->second, j);
      if (j % 2 == 1) c = -c;
      pow.push_back(c);
    }
    std::vector<mpz_class> next(n + 1, 0);
    for (u64 i = 0; i <= n; ++i) {
      if (acc[i] == 0) continue;
      for (u64 j = 0; j < pow.size() && i + j * it->first <= n; ++j)
        next[i + j * it->first] += acc[i] * pow[j];
    }
    acc.swap(next);
  }
  return acc;
}

struct SplitMix64 {
  u64 state;
  u64 next() {
    u64 z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  u64 below(u64 bound) { return next() % bound; }
};

}  // namespace oracle
