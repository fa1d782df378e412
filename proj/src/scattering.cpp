#include "tiqm/scattering.hpp"

#include <cmath>

#include "tiqm/errors.hpp"
#include "tiqm/integrals.hpp"
#include "tiqm/specfun.hpp"

namespace tiqm::scattering {

namespace {

constexpr double kHalfSqrtPi = 0.88622692545275801364908374167057259;

double checked_momentum(const ModelParams& p, Field b) {
  const double kb = p.effective_momentum(b);
  if (std::abs(kb) < kSingularMomentum) {
    throw Error(ErrorCode::singular_configuration,
                "effective momentum vanishes (" + p.describe() + ")");
  }
  return kb;
}

void check_radial_args(int lambda, double rho) {
  if (lambda != 1 && lambda != -3) throw Error(ErrorCode::domain, "lambda must be 1 or -3");
  if (!(rho >= 1.0) || !std::isfinite(rho)) {
    throw Error(ErrorCode::domain, "radial coordinate must satisfy rho >= 1");
  }
}

void check_divergence(const ModelParams& p) {
  if (p.near_divergence()) {
    throw Error(ErrorCode::divergence_band,
                "norm diverges near k = 2 k_B (" + p.describe() + ")");
  }
}

}  // namespace

cplx AngularPolynomial::operator()(double phi) const {
  const double c = std::cos(phi);
  return a0 + c * (a1 + c * a2);
}

AngularPolynomial angular_poly(const ModelParams& p, Field b) {
  const double kb = p.effective_momentum(b);
  return {cplx(1.0 - 0.5 * kb * kb, -kHalfSqrtPi * kb),
          cplx(kb, kHalfSqrtPi) * p.k,
          cplx(0.5 * p.k * p.k, 0.0)};
}

cplx radial_kernel(const ModelParams& p, int lambda, Field b, double rho) {
  check_radial_args(lambda, rho);
  const double kb = checked_momentum(p, b);
  const cplx phase = std::polar(kPi / (8.0 * kb * kb), kb * rho);
  return phase * cplx(lambda / (rho * rho * rho), 8.0 * kb / (rho * rho));
}

cplx radial_kernel_derivative(const ModelParams& p, int lambda, Field b, double rho) {
  check_radial_args(lambda, rho);
  const double kb = checked_momentum(p, b);
  const cplx phase = std::polar(kPi / (8.0 * kb * kb), kb * rho);
  const double r2 = rho * rho;
  return phase * cplx(-8.0 * kb * kb / r2 - 3.0 * lambda / (r2 * r2),
                      kb * (lambda - 16.0) / (r2 * rho));
}

cplx amplitude_closed(const ModelParams& p, int l, Field b, double rho, double phi) {
  if (l != 0 && l != 1) throw Error(ErrorCode::range, "Bessel order must be 0 or 1");
  return radial_kernel(p, lambda_of(l), b, rho) * angular_poly(p, b)(phi);
}

cplx amplitude_direct(const ModelParams& p, int l, Field b, double rho, double phi,
                      const oracle::QuadratureSpec& spec) {
  p.validate();
  if (l != 0 && l != 1) throw Error(ErrorCode::range, "Bessel order must be 0 or 1");
  if (!(rho >= 1.0)) throw Error(ErrorCode::domain, "radial coordinate must satisfy rho >= 1");
  const double kb = checked_momentum(p, b);
  const double x0 = rho * std::cos(phi);
  const double y0 = rho * std::sin(phi);
  auto integrand = [&](double rp, double php) {
    const double dist = std::hypot(x0 - rp * std::cos(php), y0 - rp * std::sin(php));
    return specfun::macdonald_imag(l, kb * dist) * std::polar(1.0, p.k * rp * std::cos(php));
  };
  return oracle::integrate_2d(integrand, p.lB, spec).value;
}

std::string_view to_string(Variant v) { return v == Variant::full ? "full" : "truncated"; }

SpinorCoefficients raw_coefficients(const ModelParams& p, double rho, double phi,
                                    Variant variant) {
  p.validate();
  if (!(rho >= 1.0)) throw Error(ErrorCode::domain, "radial coordinate must satisfy rho >= 1");
  if (variant == Variant::truncated && p.kJ == 0.0) {
    throw Error(ErrorCode::zero_state, "truncated state vanishes for k_J = 0");
  }
  const double pref = std::sqrt(p.psiD_sq) / (2.0 * kPi * std::sqrt(2.0));
  const cplx eth = std::polar(1.0, p.theta);
  const cplx plane = variant == Variant::full
                         ? 2.0 * kPi * std::polar(1.0, p.k * rho * std::cos(phi))
                         : cplx(0.0);

  SpinorCoefficients out;
  out.variant = variant;
  if (p.kJ == 0.0) {
    out.c = {pref * plane, 0.0, pref * plane * eth, 0.0};
  } else {
    const double kb = p.effective_momentum(Field::magnetic);
    const cplx a00 = amplitude_closed(p, 0, Field::zero, rho, phi);
    const cplx a10 = amplitude_closed(p, 1, Field::zero, rho, phi);
    const cplx a0b = amplitude_closed(p, 0, Field::magnetic, rho, phi);
    const cplx a1b = amplitude_closed(p, 1, Field::magnetic, rho, phi);
    const double jk = p.kJ * p.k;
    const double jb = 2.0 * p.kJ * kb;
    out.c[0] = pref * (plane + jk * (a00 + eth * a10));
    out.c[1] = -pref * jb * a0b * eth;
    out.c[2] = pref * (plane + jk * (a00 + std::conj(eth) * a10)) * eth;
    out.c[3] = -pref * jb * a1b * eth;
  }
  double sum = 0.0;
  for (const cplx& v : out.c) sum += std::norm(v);
  out.norm_sq = sum;
  return out;
}

SpinorCoefficients normalize_pointwise(const SpinorCoefficients& c) {
  double sum = 0.0;
  for (const cplx& v : c.c) sum += std::norm(v);
  if (!(sum > 0.0)) throw Error(ErrorCode::zero_state, "cannot normalize the zero vector");
  SpinorCoefficients out = c;
  const double inv = 1.0 / std::sqrt(sum);
  for (cplx& v : out.c) v *= inv;
  out.norm_sq = sum;
  return out;
}

SpinorCoefficients coefficients(const ModelParams& p, double rho, double phi,
                                Variant variant) {
  SpinorCoefficients raw = raw_coefficients(p, rho, phi, variant);
  if (variant == Variant::full) return normalize_pointwise(raw);
  const double n2 = norm_exact(p);
  const double inv = 1.0 / std::sqrt(n2);
  for (cplx& v : raw.c) v *= inv;
  raw.norm_sq = n2;
  return raw;
}

double norm_closed_form(const ModelParams& p, NormSource source) {
  p.validate();
  check_divergence(p);
  const double k = p.k;
  const double kb = p.effective_momentum(Field::magnetic);
  const double c = std::cos(p.theta);
  const double i00 = integrals::angular_closed(Field::zero, Field::zero, p).real();
  const double ibb = integrals::angular_closed(Field::magnetic, Field::magnetic, p).real();
  if (source == NormSource::appD) {
    const double a = p.psiD_sq / (8.0 * kPi * kPi);
    return 2.0 * a * std::pow(kPi * p.kJ, 2) *
           (i00 / (k * k) * (k * k * (1.0 + c) + (10.0 - 3.0 * c) / 128.0) +
            ibb / (kb * kb) * (kb * kb + 5.0 / 64.0));
  }
  return 0.25 * p.psiD_sq * kPi * p.kJ * p.kJ *
         (i00 / (k * k) * (k * k * (1.0 + c) - (1.0 + 2.0 * c) / 32.0) +
          ibb / (kb * kb) * (kb * kb - 1.0 / 32.0));
}

double norm_exact(const ModelParams& p) {
  p.validate();
  check_divergence(p);
  if (p.kJ == 0.0) throw Error(ErrorCode::zero_state, "truncated state vanishes for k_J = 0");
  using integrals::IntegralKey;
  using integrals::radial_norm_integral;
  const Field z = Field::zero;
  const Field m = Field::magnetic;
  const double kb = p.effective_momentum(m);
  const double i00 = integrals::angular_overlap_general(angular_poly(p, z), angular_poly(p, z)).real();
  const double ibb = integrals::angular_overlap_general(angular_poly(p, m), angular_poly(p, m)).real();
  const cplx n11 = radial_norm_integral({1, 1, z, z}, p);
  const cplx n33 = radial_norm_integral({-3, -3, z, z}, p);
  const cplx n13 = radial_norm_integral({1, -3, z, z}, p);
  const cplx b11 = radial_norm_integral({1, 1, m, m}, p);
  const cplx b33 = radial_norm_integral({-3, -3, m, m}, p);
  // |C1|² + |C3|²: the e^{±iθ} cross terms combine into 2cos θ; sin θ cancels.
  const double zero_part = p.k * p.k * i00 *
                           (2.0 * (n11 + n33).real() + 4.0 * std::cos(p.theta) * n13.real());
  const double field_part = 4.0 * kb * kb * ibb * (b11 + b33).real();
  const double a = p.psiD_sq / (8.0 * kPi * kPi);
  return a * p.kJ * p.kJ * (zero_part + field_part);
}

double norm_quadrature(const ModelParams& p, const oracle::QuadratureSpec& spec) {
  p.validate();
  check_divergence(p);
  oracle::QuadratureSpec inner = spec;
  inner.abs_tol = spec.abs_tol * 1e-3;
  inner.rel_tol = spec.rel_tol * 1e-2;
  auto radial = [&](double rho) {
    auto angular = [&](double phi) {
      return cplx(raw_coefficients(p, rho, phi, Variant::truncated).norm_sq, 0.0);
    };
    return rho * oracle::integrate_angular(angular, inner).value;
  };
  return oracle::integrate_radial(radial, 0.0, 1.0, spec).value.real();
}

}  // namespace tiqm::scattering
