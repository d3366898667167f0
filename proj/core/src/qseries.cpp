#include "supercong/qseries.hpp"

#include <fstream>

namespace supercong {

std::vector<mpz_class> expand(const EtaProductSpec& spec) {
  const u64 n = spec.truncation;
  if (n > 1000000) throw std::invalid_argument("expand: truncation beyond 10^6 cost guard");
  if (n < spec.leading_power) throw std::invalid_argument("expand: truncation below leading power");
  for (const EtaFactor& f : spec.factors)
    if (f.period == 0 || f.exponent == 0) throw std::invalid_argument("expand: factor with zero period or exponent");

  std::vector<mpz_class> c(n + 1, 0);
  c[spec.leading_power] = 1;
  // Each (1 - q^m)^e is e sparse multiplications by (1 - q^m): in-place
  // high-to-low update c[i] -= c[i-m].
  for (const EtaFactor& f : spec.factors) {
    for (u64 m = f.period; m <= n; m += f.period) {
      for (u32 e = 0; e < f.exponent; ++e) {
        for (u64 i = n; i >= m; --i) c[i] -= c[i - m];
      }
    }
  }
  return c;
}

void write_coeff_csv(const std::string& path, const std::vector<mpz_class>& coeffs) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_coeff_csv: cannot open " + path);
  out << "n,coefficient\n";
  for (std::size_t i = 0; i < coeffs.size(); ++i) out << i << ',' << coeffs[i].get_str() << '\n';
  if (!out) throw std::runtime_error("write_coeff_csv: write failed for " + path);
}

}  // namespace supercong
