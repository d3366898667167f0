#pragma once

#include <vector>

#include "supercong/modmath.hpp"

namespace supercong {

// y^2 = x^3 + c2 x^2 + c1 x + c0 with coefficients reduced mod p.
struct CubicCurve {
  u64 c2 = 0;
  u64 c1 = 0;
  u64 c0 = 0;

  static CubicCurve reduce(i64 c2, i64 c1, i64 c0, u64 p) {
    return {signed_mod(c2, p), signed_mod(c1, p), signed_mod(c0, p)};
  }
  // x(x-1)(x-lambda) expanded.
  static CubicCurve legendre_lambda(u64 lambda, u64 p) {
    return {signed_mod(-1 - static_cast<i64>(lambda % p), p), lambda % p, 0};
  }
};

// Quadratic-character lookup for one prime: sym(v) in {-1,0,1} in O(1)
// after an O(p) squares pass.
class SymbolTable {
 public:
  explicit SymbolTable(u64 p);
  u64 p() const { return p_; }
  int operator()(u64 value_mod_p) const { return table_[value_mod_p]; }

 private:
  u64 p_;
  std::vector<signed char> table_;
};

// sum_{x=0}^{p-1} ((x^3 + c2 x^2 + c1 x + c0) | p), O(p).
i64 char_sum(const SymbolTable& sym, const CubicCurve& curve);
i64 char_sum(u64 p, const CubicCurve& curve);

// Number of projective points: p + 1 + char_sum.
i64 point_count(u64 p, const CubicCurve& curve);
i64 point_count(const SymbolTable& sym, const CubicCurve& curve);

}  // namespace supercong
