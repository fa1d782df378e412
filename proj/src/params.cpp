#include "tiqm/params.hpp"

#include <cmath>
#include <cstdio>

#include "tiqm/errors.hpp"

namespace tiqm {

std::string_view to_string(Field b) { return b == Field::zero ? "0" : "B"; }

void ModelParams::validate() const {
  auto finite = [](double v) { return std::isfinite(v); };
  if (!finite(k) || !finite(theta) || !finite(kJ) || !finite(kB) ||
      !finite(lB) || !finite(rho_prime) || !finite(psiD_sq)) {
    throw Error(ErrorCode::domain, "model parameters must be finite");
  }
  if (k <= 0.0) throw Error(ErrorCode::domain, "k must be positive");
  if (lB <= 0.0) throw Error(ErrorCode::domain, "l_B must be positive");
  if (psiD_sq <= 0.0) throw Error(ErrorCode::domain, "|psi_D|^2 must be positive");
  if (kJ < 0.0 || kB < 0.0 || rho_prime < 0.0) {
    throw Error(ErrorCode::domain, "k_J, k_B and rho' must be non-negative");
  }
}

bool ModelParams::near_divergence() const {
  return std::abs(k - 2.0 * kB) <= kDivergenceBand;
}

std::string ModelParams::describe() const {
  char buf[192];
  std::snprintf(buf, sizeof buf, "k=%.6g,theta=%.6g,kJ=%.6g,kB=%.6g,lB=%.6g",
                k, theta, kJ, kB, lB);
  return buf;
}

}  // namespace tiqm
