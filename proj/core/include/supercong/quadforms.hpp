#pragma once

#include <optional>

#include "supercong/modmath.hpp"

namespace supercong {

// Binary quadratic form a_coef x^2 + b_coef y^2, representing scale * p.
// scale = 4 is used for 4p = L^2 + 27 M^2.
struct QuadForm {
  u32 a_coef = 1;
  u32 b_coef = 1;
  u32 scale = 1;
  friend bool operator==(const QuadForm&, const QuadForm&) = default;
};

namespace forms {
inline constexpr QuadForm x2_y2{1, 1, 1};
inline constexpr QuadForm x2_2y2{1, 2, 1};
inline constexpr QuadForm x2_3y2{1, 3, 1};
inline constexpr QuadForm x2_7y2{1, 7, 1};
inline constexpr QuadForm x2_15y2{1, 15, 1};
inline constexpr QuadForm threex2_5y2{3, 5, 1};
inline constexpr QuadForm four_p_l2_27m2{1, 27, 4};
}  // namespace forms

// One representation; x may turn negative after sign normalization.
struct QuadRep {
  i64 x = 0;
  i64 y = 0;
  QuadForm form;
};

// Exact check of form.a_coef x^2 + form.b_coef y^2 == form.scale * p.
bool rep_satisfies(const QuadRep& rep, u64 p);

// Cornacchia: x^2 + d y^2 = p for odd prime p, 1 <= d < p.
std::optional<std::pair<u64, u64>> cornacchia(u64 p, u64 d);

// Some representation with x, y >= 0, or absence.  Cornacchia-backed for the
// scale-1 forms; the symmetric form x^2 + y^2 is returned with x <= y.
// Throws when p divides 2 * a_coef * b_coef.
std::optional<QuadRep> represent(u64 p, QuadForm form);

// Exhaustive search oracle over 0 <= x <= sqrt(scale p / a_coef).
std::optional<QuadRep> represent_brute(u64 p, QuadForm form);

// Congruence condition x == residue (mod modulus) used to pin the sign of x.
struct SignRule {
  u32 modulus;
  u32 residue;
};

// Replaces x by the unique member of {x, -x} meeting the rule.
QuadRep normalize_sign(QuadRep rep, SignRule rule);

}  // namespace supercong
