#pragma once

#include <complex>
#include <string>

namespace tiqm {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// Width of the band |k - 2 k_B| around the norm singularity that sweeps skip.
inline constexpr double kDivergenceBand = 1e-3;

// Which effective momentum a quantity is built from: k (zero field) or
// k - 2 k_B (Zeeman-shifted channel).
enum class Field { zero, magnetic };

std::string_view to_string(Field b);

// Dimensionless configuration of the dot/surface scattering problem.
// Momenta are in units of 1/l_B; kJ = J/v and kB = B/v.
struct ModelParams {
  double k = 1.0;
  double theta = 0.0;
  double kJ = 1.0;
  double kB = 0.0;
  double lB = 1.0;
  double rho_prime = 0.0;
  double psiD_sq = 1.0;

  // Throws Error(domain) when k <= 0, lB <= 0, psiD_sq <= 0 or any field
  // is negative or non-finite.
  void validate() const;

  // k for Field::zero, k - 2 kB for Field::magnetic.
  double effective_momentum(Field b) const {
    return b == Field::zero ? k : k - 2.0 * kB;
  }

  // True inside the band where the normalization diverges.
  bool near_divergence() const;

  // Compact `key=value,...` rendering used in ledgers and CSV metadata.
  std::string describe() const;
};

// 1 for l = 0 and -3 for l = 1.
constexpr int lambda_of(int l) { return 1 - 4 * l * l; }

}  // namespace tiqm
