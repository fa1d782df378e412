#include "tiqm/specfun.hpp"

#include <cmath>
#include <limits>

#include "tiqm/errors.hpp"

namespace tiqm::specfun {

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
constexpr double kEps = std::numeric_limits<double>::epsilon();

bool on_branch_cut(cplx z) { return z.imag() == 0.0 && z.real() < 0.0; }

// E1(z) = -γ - log z - Σ_{k>=1} (-z)^k / (k k!)
cplx e1_series(cplx z) {
  cplx sum = 0.0;
  cplx term = 1.0;  // (-z)^k / k!
  for (int k = 1; k < 500; ++k) {
    term *= -z / static_cast<double>(k);
    const cplx add = term / static_cast<double>(k);
    sum += add;
    if (std::abs(add) <= kEps * std::abs(sum)) break;
  }
  return -kEulerGamma - std::log(z) - sum;
}

// E1(z) = e^{-z} / (z + 1 - 1²/(z + 3 - 2²/(z + 5 - ...))), modified Lentz.
cplx e1_continued_fraction(cplx z) {
  constexpr double tiny = 1e-300;
  cplx b = z + 1.0;
  cplx c = 1.0 / tiny;
  cplx d = 1.0 / b;
  cplx h = d;
  for (int i = 1; i < 100000; ++i) {
    const double a = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const cplx del = c * d;
    h *= del;
    if (std::abs(del - 1.0) <= kEps) return h * std::exp(-z);
  }
  throw Error(ErrorCode::non_convergence, "E1 continued fraction did not converge");
}

}  // namespace

cplx exp_integral_e1(cplx z) {
  if (z == cplx(0.0, 0.0)) throw Error(ErrorCode::domain, "E1 is singular at z = 0");
  if (on_branch_cut(z)) throw Error(ErrorCode::domain, "E1 argument on the branch cut");
  const double r = std::abs(z);
  if (r < kE1Crossover) return e1_series(z);
  // Close to the cut the fraction converges slowly while the series loses
  // only a factor |z| e^{|z| + Re z} to cancellation.
  if (z.real() < 0.0 && r + z.real() < 2.0 && r < 40.0) return e1_series(z);
  if (z.real() > 745.0) return 0.0;
  return e1_continued_fraction(z);
}

cplx gamma_scaled(int n, cplx z) {
  if (n < 1 || n > 5) throw Error(ErrorCode::range, "gamma order must be in 1..5");
  if (std::abs(z) < kGammaLimitEps) return 1.0 / static_cast<double>(n);
  // G_m = z^m Γ(-m, z) obeys G_m = (e^{-z} - z G_{m-1}) / m with G_0 = E1(z).
  const cplx ez = std::exp(-z);
  cplx g = exp_integral_e1(z);
  for (int m = 1; m <= n; ++m) g = (ez - z * g) / static_cast<double>(m);
  return g;
}

cplx upper_gamma_neg(int n, cplx z) {
  if (n < 1 || n > 5) throw Error(ErrorCode::range, "gamma order must be in 1..5");
  if (z == cplx(0.0, 0.0)) throw Error(ErrorCode::domain, "Γ(-n, 0) is infinite");
  if (on_branch_cut(z)) throw Error(ErrorCode::domain, "Γ(-n, z) argument on the branch cut");
  const cplx ez = std::exp(-z);
  cplx g = exp_integral_e1(z);
  for (int m = 1; m <= n; ++m) g = (ez - z * g) / static_cast<double>(m);
  return g / std::pow(z, n);
}

ErfResult erf_complex(cplx z) {
  ErfResult out;
  out.imprecise = std::abs(z) > 20.0;
  if (z == cplx(0.0, 0.0)) {
    out.value = 0.0;
    return out;
  }
  if (z.real() < 0.0) {
    out.value = -erf_complex(-z).value;
    return out;
  }
  constexpr double two_over_sqrt_pi = 1.12837916709551257389615890312154517;
  if (z.real() <= 2.0) {
    // Maclaurin series; cancellation costs at most e^{2 Re(z)^2}.
    const cplx z2 = z * z;
    cplx term = z;  // (-1)^n z^{2n+1} / n!
    cplx sum = z;
    for (int n = 1; n < 5000; ++n) {
      term *= -z2 / static_cast<double>(n);
      const cplx add = term / static_cast<double>(2 * n + 1);
      sum += add;
      if (std::abs(add) <= kEps * std::abs(sum)) break;
    }
    out.value = two_over_sqrt_pi * sum;
    return out;
  }
  // erfc(z) = e^{-z²}/√π · 1/(z + (1/2)/(z + 1/(z + (3/2)/(z + ...))))
  constexpr double tiny = 1e-300;
  cplx f = z;
  cplx c = z;
  cplx d = 0.0;
  for (int i = 1; i < 100000; ++i) {
    const double a = 0.5 * i;
    d = z + a * d;
    if (d == cplx(0.0, 0.0)) d = tiny;
    c = z + a / c;
    if (c == cplx(0.0, 0.0)) c = tiny;
    d = 1.0 / d;
    const cplx del = c * d;
    f *= del;
    if (std::abs(del - 1.0) <= kEps) break;
  }
  const cplx erfc = 0.5 * two_over_sqrt_pi * std::exp(-z * z) / f;
  out.value = 1.0 - erfc;
  return out;
}

cplx bessel_k_asymptotic(int l, cplx z, BesselPrefactor prefactor) {
  if (l != 0 && l != 1) throw Error(ErrorCode::range, "Bessel order must be 0 or 1");
  if (std::abs(z) < 1.0) {
    throw Error(ErrorCode::domain, "asymptotic Bessel form needs |z| >= 1");
  }
  const cplx lead = prefactor == BesselPrefactor::as_printed
                        ? kPi / (2.0 * z)
                        : std::sqrt(kPi / (2.0 * z));
  const double mu = 4.0 * l * l - 1.0;
  return lead * std::exp(-z) * (1.0 + mu / (8.0 * z));
}

cplx macdonald_imag(int l, double x) {
  if (l != 0 && l != 1) throw Error(ErrorCode::range, "Bessel order must be 0 or 1");
  if (x == 0.0 || !std::isfinite(x)) {
    throw Error(ErrorCode::domain, "K_l(-ix) needs finite nonzero x");
  }
  if (x < 0.0) return std::conj(macdonald_imag(l, -x));
  const double nu = static_cast<double>(l);
  const cplx hankel(std::cyl_bessel_j(nu, x), std::cyl_neumann(nu, x));
  const cplx phase = l == 0 ? cplx(0.0, 1.0) : cplx(-1.0, 0.0);  // i^{l+1}
  return 0.5 * kPi * phase * hankel;
}

}  // namespace tiqm::specfun
