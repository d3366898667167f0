#include "supercong/curve_count.hpp"

namespace supercong {

SymbolTable::SymbolTable(u64 p) : p_(p), table_(p, -1) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("SymbolTable: p must be an odd prime");
  table_[0] = 0;
  for (u64 x = 1; x <= (p - 1) / 2; ++x) table_[mulmod(x, x, p)] = 1;
}

i64 char_sum(const SymbolTable& sym, const CubicCurve& curve) {
  const u64 p = sym.p();
  i64 total = 0;
  for (u64 x = 0; x < p; ++x) {
    u64 f = addmod(x, curve.c2, p);  // Horner: ((x + c2) x + c1) x + c0
    f = mulmod(f, x, p);
    f = addmod(f, curve.c1, p);
    f = mulmod(f, x, p);
    f = addmod(f, curve.c0, p);
    total += sym(f);
  }
  return total;
}

i64 char_sum(u64 p, const CubicCurve& curve) { return char_sum(SymbolTable(p), curve); }

i64 point_count(const SymbolTable& sym, const CubicCurve& curve) {
  return static_cast<i64>(sym.p()) + 1 + char_sum(sym, curve);
}

i64 point_count(u64 p, const CubicCurve& curve) { return static_cast<i64>(p) + 1 + char_sum(p, curve); }

}  // namespace supercong
