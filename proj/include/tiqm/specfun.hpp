#pragma once

#include "tiqm/params.hpp"

// Complex special functions behind the radial and angular closed forms.
// Principal branches throughout; the cut of E1 and Γ(-n, ·) lies on the
// negative real axis.
namespace tiqm::specfun {

// Below this modulus gamma_scaled returns its analytic limit 1/n.
inline constexpr double kGammaLimitEps = 1e-8;

// Series / continued-fraction switch for E1.
inline constexpr double kE1Crossover = 4.0;

// E1(z) = Γ(0, z). Throws Error(domain) for z = 0 or z on the cut.
cplx exp_integral_e1(cplx z);

// Γ(-n, z) for n in 1..5 via the downward recursion from Γ(0, z).
cplx upper_gamma_neg(int n, cplx z);

// z^n Γ(-n, z), finite at z = 0 where it equals 1/n.
cplx gamma_scaled(int n, cplx z);

struct ErfResult {
  cplx value;
  // Set outside |z| <= 20, where the accuracy contract no longer holds.
  bool imprecise = false;
};

ErfResult erf_complex(cplx z);

enum class BesselPrefactor {
  as_printed,  // π/(2z), the form the closed-form amplitudes are built on
  standard,    // sqrt(π/(2z)), the textbook leading term
};

// Two-term large-|z| form of K_0 / K_1:
//   prefactor(z) e^{-z} [1 + (4l² - 1)/(8z)].
// Throws Error(domain) for |z| < 1 and Error(range) for l outside {0, 1}.
cplx bessel_k_asymptotic(int l, cplx z,
                         BesselPrefactor prefactor = BesselPrefactor::as_printed);

// Exact K_l(-i x) for real x != 0, l in {0, 1}, through the Hankel relation
// K_l(-ix) = (π/2) i^{l+1} H^(1)_l(x); negative x uses K(z̄) = conj K(z).
cplx macdonald_imag(int l, double x);

}  // namespace tiqm::specfun
