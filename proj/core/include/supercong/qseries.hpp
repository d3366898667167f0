#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "supercong/modmath.hpp"

namespace supercong {

// One factor group prod_n (1 - q^(period*n))^exponent of an eta-style product.
struct EtaFactor {
  u32 period;
  u32 exponent;
};

// q^leading_power * prod over factors, truncated at q^truncation.
struct EtaProductSpec {
  u32 leading_power = 1;
  std::vector<EtaFactor> factors;
  u64 truncation = 0;

  // q prod (1-q^{2n})^4 (1-q^{4n})^4: source of the a(n) coefficients.
  static EtaProductSpec eta_a(u64 n) { return {1, {{2, 4}, {4, 4}}, n}; }
  // q prod (1-q^{4n})^6: source of the b(n) coefficients.
  static EtaProductSpec eta_b(u64 n) { return {1, {{4, 6}}, n}; }
};

// Exact coefficients of q^0..q^truncation.
std::vector<mpz_class> expand(const EtaProductSpec& spec);

// CSV dump with header "n,coefficient".
void write_coeff_csv(const std::string& path, const std::vector<mpz_class>& coeffs);

}  // namespace supercong
