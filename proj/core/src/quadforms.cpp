#include "supercong/quadforms.hpp"

#include <cmath>

namespace supercong {

namespace {

u64 isqrt(u64 n) {
  if (n == 0) return 0;
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::optional<u64> perfect_sqrt(u64 n) {
  u64 r = isqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

// Half-gcd descent from a square root r of -d mod n: run the remainder
// sequence of (n, r) down to the first value <= sqrt(n) and test it as x.
std::optional<std::pair<u64, u64>> cornacchia_descend(u64 n, u64 r, u64 d) {
  u64 a = n, b = r;
  const u64 bound = isqrt(n);
  while (b > bound) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  if (b == 0) return std::nullopt;
  const u64 x2 = b * b;
  if ((n - x2) % d != 0) return std::nullopt;
  if (auto y = perfect_sqrt((n - x2) / d)) return std::make_pair(b, *y);
  return std::nullopt;
}

}  // namespace

bool rep_satisfies(const QuadRep& rep, u64 p) {
  const i128 lhs = i128(rep.form.a_coef) * rep.x * rep.x + i128(rep.form.b_coef) * rep.y * rep.y;
  return lhs == i128(rep.form.scale) * p;
}

std::optional<std::pair<u64, u64>> cornacchia(u64 p, u64 d) {
  if (d == 0 || d >= p) throw std::invalid_argument("cornacchia: need 1 <= d < p");
  auto r = sqrt_mod(p - d % p, p);
  if (!r) return std::nullopt;
  u64 root = *r;
  if (root < p - root) root = p - root;  // start the descent from the larger root
  if (auto s = cornacchia_descend(p, root, d)) return s;
  return cornacchia_descend(p, p - root, d);
}

std::optional<QuadRep> represent_brute(u64 p, QuadForm form) {
  const u64 target = u64(form.scale) * p;
  for (u64 x = 0; form.a_coef * x * x <= target; ++x) {
    const u64 rest = target - form.a_coef * x * x;
    if (rest % form.b_coef != 0) continue;
    if (auto y = perfect_sqrt(rest / form.b_coef))
      return QuadRep{static_cast<i64>(x), static_cast<i64>(*y), form};
  }
  return std::nullopt;
}

std::optional<QuadRep> represent(u64 p, QuadForm form) {
  if (p % 2 == 0 || form.a_coef % p == 0 || form.b_coef % p == 0)
    throw std::invalid_argument("represent: p must be odd and coprime to the form coefficients");

  if (form.scale == 4) {
    // 4p = x^2 + 27 y^2; direct search over y, O(sqrt p).
    const u64 target = 4 * p;
    for (u64 y = 1; 27 * y * y <= target; ++y) {
      if (auto x = perfect_sqrt(target - 27 * y * y))
        return QuadRep{static_cast<i64>(*x), static_cast<i64>(y), form};
    }
    return std::nullopt;
  }

  if (form.a_coef == 1) {
    if (form.b_coef > p) return std::nullopt;  // would force y = 0, x^2 = p
    auto s = cornacchia(p, form.b_coef);
    if (!s) return std::nullopt;
    auto [x, y] = *s;
    if (form.b_coef == 1 && x > y) std::swap(x, y);
    QuadRep rep{static_cast<i64>(x), static_cast<i64>(y), form};
    if (!rep_satisfies(rep, p)) return represent_brute(p, form);
    return rep;
  }

  if (form.a_coef == 3 && form.b_coef == 5) {
    // 3x^2 + 5y^2 = p  <=>  u^2 + 15 y^2 = 3p with u = 3x.  Descend on 3p
    // from a root of -15 combining sqrt(-15) mod p with 0 mod 3.
    if (auto rp = sqrt_mod(signed_mod(-15, p), p)) {
      const u64 n = 3 * p;
      for (u64 base : {*rp, p - *rp}) {
        u64 root = base % n;
        while (root % 3 != 0) root += p;  // CRT: root = 0 (mod 3)
        root %= n;
        if (auto s = cornacchia_descend(n, root, 15)) {
          auto [u, y] = *s;
          if (u % 3 == 0) {
            QuadRep rep{static_cast<i64>(u / 3), static_cast<i64>(y), form};
            if (rep_satisfies(rep, p)) return rep;
          }
        }
      }
    }
    return represent_brute(p, form);
  }

  return represent_brute(p, form);
}

QuadRep normalize_sign(QuadRep rep, SignRule rule) {
  if (signed_mod(rep.x, rule.modulus) == rule.residue % rule.modulus) return rep;
  QuadRep flipped = rep;
  flipped.x = -rep.x;
  if (signed_mod(flipped.x, rule.modulus) == rule.residue % rule.modulus) return flipped;
  throw std::logic_error("normalize_sign: rule satisfied by neither sign");
}

}  // namespace supercong
