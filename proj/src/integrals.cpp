#include "tiqm/integrals.hpp"

#include <cmath>

#include "tiqm/errors.hpp"
#include "tiqm/specfun.hpp"

namespace tiqm::integrals {

namespace {

constexpr cplx kI(0.0, 1.0);

double checked_momentum(const ModelParams& p, Field b) {
  const double kb = p.effective_momentum(b);
  if (std::abs(kb) < scattering::kSingularMomentum) {
    throw Error(ErrorCode::singular_configuration,
                "effective momentum vanishes (" + p.describe() + ")");
  }
  return kb;
}

cplx ipow(int n) {
  static constexpr cplx powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return powers[((n % 4) + 4) % 4];
}

cplx printed_i00(double k) {
  return 19.0 * kPi / 16.0 * std::pow(k, 4) + (0.75 * kPi - 1.0) * kPi * k * k + 2.0 * kPi;
}

cplx printed_ibb(double k, double kB) {
  return printed_i00(k) + 8.0 * kPi * std::pow(kB, 4) - 16.0 * kPi * k * std::pow(kB, 3) +
         (14.0 * k * k + 2.0 * kPi - 8.0) * kPi * kB * kB +
         ((8.0 - 2.0 * kPi) * k - 6.0 * k * k * k) * kPi * kB;
}

cplx printed_i0b(double k, double kB) {
  const double re = printed_i00(k).real() - (4.0 - k * k) * kPi * kB * kB -
                    (3.0 * k * k + (kPi - 4.0)) * kPi * k * kB;
  const double im = -2.0 * kPi * std::sqrt(kPi) * (k * kB * kB - (1.25 * k * k - 1.0) * kB);
  return {re, im};
}

void check_mode(FormulaMode mode) {
  if (mode != FormulaMode::derived && mode != FormulaMode::paper_literal &&
      mode != FormulaMode::quadrature) {
    throw Error(ErrorCode::domain, "unknown formula mode");
  }
}

}  // namespace

void IntegralKey::validate() const {
  auto ok = [](int l) { return l == 1 || l == -3; };
  if (!ok(lambda1) || !ok(lambda2)) throw Error(ErrorCode::domain, "lambda must be 1 or -3");
}

std::string IntegralKey::label() const {
  return "[" + std::to_string(lambda1) + "," + std::to_string(lambda2) + "," +
         std::string(to_string(b1)) + "," + std::string(to_string(b2)) + "]";
}

std::string_view to_string(FormulaMode m) {
  switch (m) {
    case FormulaMode::derived: return "derived";
    case FormulaMode::paper_literal: return "paper_literal";
    case FormulaMode::quadrature: return "quadrature";
  }
  return "?";
}

cplx angular_overlap_general(const scattering::AngularPolynomial& p1,
                             const scattering::AngularPolynomial& p2) {
  // ∫cos⁰ = 2π, ∫cos² = π, ∫cos⁴ = 3π/4; odd moments vanish.
  const cplx a0 = std::conj(p1.a0);
  const cplx a1 = std::conj(p1.a1);
  const cplx a2 = std::conj(p1.a2);
  return 2.0 * kPi * a0 * p2.a0 + kPi * (a1 * p2.a1 + a0 * p2.a2 + a2 * p2.a0) +
         0.75 * kPi * a2 * p2.a2;
}

cplx angular_overlap_printed(const scattering::AngularPolynomial& p1,
                             const scattering::AngularPolynomial& p2) {
  return 2.0 * kPi * std::conj(p1.a0) * p2.a0 +
         kPi * (std::conj(p1.a1) * p2.a1 + std::conj(p1.a0) * p1.a2 + std::conj(p1.a2) * p2.a0) +
         0.75 * kPi * std::conj(p2.a2) * p2.a2;
}

cplx angular_closed(Field b1, Field b2, const ModelParams& p) {
  if (b1 == Field::zero && b2 == Field::zero) return printed_i00(p.k);
  if (b1 == Field::magnetic && b2 == Field::magnetic) return printed_ibb(p.k, p.kB);
  const cplx i0b = printed_i0b(p.k, p.kB);
  return b1 == Field::zero ? i0b : std::conj(i0b);
}

cplx angular_quadrature(Field b1, Field b2, const ModelParams& p,
                        const oracle::QuadratureSpec& spec) {
  const scattering::AngularPolynomial g1 = scattering::angular_poly(p, b1);
  const scattering::AngularPolynomial g2 = scattering::angular_poly(p, b2);
  return oracle::integrate_angular(
             [&](double phi) { return std::conj(g1(phi)) * g2(phi); }, spec)
      .value;
}

cplx radial_derivative_integral(const IntegralKey& key, const ModelParams& p,
                                FormulaMode mode, const RadialTweak& tweak) {
  key.validate();
  check_mode(mode);
  const double k1 = checked_momentum(p, key.b1);
  const double k2 = checked_momentum(p, key.b2);
  const double l1 = key.lambda1;
  const double l2 = key.lambda2;
  const double dk = k1 - k2;
  const double scale = std::pow(kPi / (k1 * k2), 2);

  if (mode == FormulaMode::quadrature) {
    auto f = [&](double rho) {
      return rho * std::conj(scattering::radial_kernel(p, key.lambda1, key.b1, rho)) *
             scattering::radial_kernel_derivative(p, key.lambda2, key.b2, rho);
    };
    oracle::QuadratureSpec spec;
    spec.abs_tol = 1e-12;
    spec.rel_tol = 1e-9;
    return oracle::integrate_radial(f, k2 - k1, 1.0, spec).value;
  }

  if (mode == FormulaMode::paper_literal) {
    const cplx z(0.0, -dk);
    const double f[6] = {0.0,
                         0.0,
                         k1 * k2 * k2,
                         tweak.f3_scale * (l1 * k2 * k2 / 8.0 - l2 * k1 * k2 / 8.0 + 2.0 * k1 * k2),
                         l1 * l2 * k2 / 64.0,
                         l1 * l2 / 32.0};
    cplx sum = 0.0;
    for (int n = 2; n <= 5; ++n) sum += f[n] * ipow(n) * specfun::gamma_scaled(n, z);
    return scale * sum;
  }

  const cplx s(0.0, dk);
  const cplx c[6] = {0.0,
                     0.0,
                     64.0 * kI * k1 * k2 * k2,
                     tweak.f3_scale * (-8.0 * l1 * k2 * k2 + 8.0 * k1 * k2 * (l2 - 16.0)),
                     kI * (l1 * k2 * (l2 - 16.0) + 24.0 * l2 * k1),
                     -3.0 * l1 * l2};
  cplx sum = 0.0;
  for (int n = 2; n <= 5; ++n) sum += c[n] * specfun::gamma_scaled(n, s);
  return scale / 64.0 * sum;
}

cplx radial_norm_integral(const IntegralKey& key, const ModelParams& p, FormulaMode mode) {
  key.validate();
  check_mode(mode);
  const double k1 = checked_momentum(p, key.b1);
  const double k2 = checked_momentum(p, key.b2);
  const double l1 = key.lambda1;
  const double l2 = key.lambda2;
  const double dk = k1 - k2;
  const double scale = std::pow(kPi / (k1 * k2), 2);

  if (mode == FormulaMode::quadrature) {
    auto f = [&](double rho) {
      return rho * std::conj(scattering::radial_kernel(p, key.lambda1, key.b1, rho)) *
             scattering::radial_kernel(p, key.lambda2, key.b2, rho);
    };
    oracle::QuadratureSpec spec;
    spec.abs_tol = 1e-12;
    spec.rel_tol = 1e-9;
    return oracle::integrate_radial(f, k2 - k1, 1.0, spec).value;
  }

  if (mode == FormulaMode::paper_literal) {
    const cplx z(0.0, -dk);
    const double g[5] = {0.0, 0.0, k1 * k2, (l1 * k2 - l2 * k1) / 8.0, l1 * l2 / 64.0};
    cplx sum = 0.0;
    for (int n = 2; n <= 4; ++n) sum += g[n] * ipow(n - 1) * specfun::gamma_scaled(n, z);
    return scale * sum;
  }

  const cplx s(0.0, dk);
  const cplx g[5] = {0.0, 0.0, k1 * k2, kI * (l1 * k2 - l2 * k1) / 8.0, l1 * l2 / 64.0};
  cplx sum = 0.0;
  for (int n = 2; n <= 4; ++n) sum += g[n] * specfun::gamma_scaled(n, s);
  return scale * sum;
}

std::string_view to_string(PrintedNorm which) {
  switch (which) {
    case PrintedNorm::n00_00: return "IN_00_00";
    case PrintedNorm::n11_00: return "IN_11_00";
    case PrintedNorm::n00_BB: return "IN_00_BB";
    case PrintedNorm::n11_BB: return "IN_11_BB";
    case PrintedNorm::n10_00: return "IN_10_00";
    case PrintedNorm::n01_00: return "IN_01_00";
    case PrintedNorm::n10_BB: return "IN_10_BB";
    case PrintedNorm::n01_BB: return "IN_01_BB";
  }
  return "?";
}

IntegralKey key_of(PrintedNorm which) {
  const Field z = Field::zero;
  const Field m = Field::magnetic;
  switch (which) {
    case PrintedNorm::n00_00: return {1, 1, z, z};
    case PrintedNorm::n11_00: return {-3, -3, z, z};
    case PrintedNorm::n00_BB: return {1, 1, m, m};
    case PrintedNorm::n11_BB: return {-3, -3, m, m};
    case PrintedNorm::n10_00: return {-3, 1, z, z};
    case PrintedNorm::n01_00: return {1, -3, z, z};
    case PrintedNorm::n10_BB: return {-3, 1, m, m};
    case PrintedNorm::n01_BB: return {1, -3, m, m};
  }
  throw Error(ErrorCode::domain, "unknown printed integral");
}

cplx printed_norm_integral(PrintedNorm which, const ModelParams& p) {
  const bool field = which == PrintedNorm::n00_BB || which == PrintedNorm::n11_BB ||
                     which == PrintedNorm::n10_BB || which == PrintedNorm::n01_BB;
  const double kb = checked_momentum(p, field ? Field::magnetic : Field::zero);
  const double k2 = kb * kb;
  const double half = kPi * kPi / (2.0 * k2 * k2);
  switch (which) {
    case PrintedNorm::n00_00: return half * (k2 + 1.0 / 128.0);
    case PrintedNorm::n11_00: return half * (k2 + 9.0 / 128.0);
    case PrintedNorm::n00_BB: return 2.0 * half * (k2 + 1.0 / 128.0);
    case PrintedNorm::n11_BB: return 2.0 * half * (k2 + 9.0 / 128.0);
    case PrintedNorm::n10_00:
    case PrintedNorm::n10_BB: return half * cplx(k2 - 3.0 / 128.0, kb / 3.0);
    case PrintedNorm::n01_00:
    case PrintedNorm::n01_BB: return half * cplx(k2 - 3.0 / 128.0, -kb / 3.0);
  }
  throw Error(ErrorCode::domain, "unknown printed integral");
}

std::string_view to_string(PrintedRadial which) {
  switch (which) {
    case PrintedRadial::ir11_00: return "IR_11_00";
    case PrintedRadial::ir_sum_00: return "IR_10_00+IR_01_00";
    case PrintedRadial::ir_diff_BB: return "IR_10_BB-IR_01_BB";
  }
  return "?";
}

cplx printed_radial_integral(PrintedRadial which, const ModelParams& p) {
  const double k = checked_momentum(p, Field::zero);
  const double pre = -kPi * kPi / (k * k);
  switch (which) {
    case PrintedRadial::ir11_00:
      return pre * cplx(0.5 * k * (k * k - 1.0 / 128.0), 2.0 / 3.0 * k * k - 1.0 / 160.0);
    case PrintedRadial::ir_sum_00:
      return pre * cplx(k * (k * k + 1.0 / 128.0), k * k / 3.0 + 3.0 / 80.0);
    case PrintedRadial::ir_diff_BB: return 0.0;
  }
  throw Error(ErrorCode::domain, "unknown printed integral");
}

cplx radial_combination(PrintedRadial which, const ModelParams& p, FormulaMode mode) {
  const Field z = Field::zero;
  const Field m = Field::magnetic;
  switch (which) {
    case PrintedRadial::ir11_00: return radial_derivative_integral({1, 1, z, z}, p, mode);
    case PrintedRadial::ir_sum_00:
      return radial_derivative_integral({-3, 1, z, z}, p, mode) +
             radial_derivative_integral({1, -3, z, z}, p, mode);
    case PrintedRadial::ir_diff_BB:
      return radial_derivative_integral({-3, 1, m, m}, p, mode) -
             radial_derivative_integral({1, -3, m, m}, p, mode);
  }
  throw Error(ErrorCode::domain, "unknown printed integral");
}

void OrthogonalWeights::validate() const {
  const double n = std::norm(alpha1) + std::norm(alpha2) + std::norm(alpha3);
  if (std::abs(n - 1.0) > 1e-12) {
    throw Error(ErrorCode::not_normalized, "orthogonal weights must satisfy sum |alpha|^2 = 1");
  }
}

scattering::SpinorCoefficients orthogonal_coefficients(const scattering::SpinorCoefficients& c,
                                                       const OrthogonalWeights& w) {
  w.validate();
  const auto& [c1, c2, c3, c4] = c.c;
  scattering::SpinorCoefficients out = c;
  out.c[0] = w.alpha1 * c2 + w.alpha2 * c3 + w.alpha3 * c4;
  out.c[1] = -w.alpha1 * c1 - w.alpha2 * c4 - w.alpha3 * c3;
  out.c[2] = w.alpha1 * c4 - w.alpha2 * c1 + w.alpha3 * c2;
  out.c[3] = -w.alpha1 * c3 + w.alpha2 * c2 - w.alpha3 * c1;
  return out;
}

cplx matrix_element_combination(const Eigen::Matrix4cd& r, const OrthogonalWeights& w) {
  auto R = [&r](int i, int k) { return r(i - 1, k - 1); };
  return w.alpha1 * (R(1, 2) - R(2, 1) + R(3, 4) - R(4, 3)) +
         w.alpha2 * (R(1, 3) - R(3, 1) - R(2, 4) + R(4, 2)) +
         w.alpha3 * (R(1, 4) - R(4, 1) - R(2, 3) + R(3, 2));
}

RDifferences r_differences(const ModelParams& p, FormulaMode mode) {
  p.validate();
  check_mode(mode);
  if (p.kJ == 0.0) throw Error(ErrorCode::zero_state, "truncated state vanishes for k_J = 0");
  if (p.near_divergence()) {
    throw Error(ErrorCode::divergence_band, "norm diverges near k = 2 k_B (" + p.describe() + ")");
  }
  const double k = p.k;
  const double kb = p.effective_momentum(Field::magnetic);
  const Field z = Field::zero;
  const Field m = Field::magnetic;

  double norm = 0.0;
  cplx i00;
  cplx ibb;
  if (mode == FormulaMode::paper_literal) {
    norm = scattering::norm_closed_form(p, scattering::NormSource::sec3);
    i00 = angular_closed(z, z, p);
    ibb = angular_closed(m, m, p);
  } else if (mode == FormulaMode::quadrature) {
    norm = scattering::norm_quadrature(p);
    i00 = angular_quadrature(z, z, p);
    ibb = angular_quadrature(m, m, p);
  } else {
    norm = scattering::norm_exact(p);
    i00 = angular_overlap_general(scattering::angular_poly(p, z), scattering::angular_poly(p, z));
    ibb = angular_overlap_general(scattering::angular_poly(p, m), scattering::angular_poly(p, m));
  }
  const double base = p.psiD_sq * p.kJ * p.kJ / (8.0 * kPi * kPi * norm);
  const double a13 = base * k * k;
  const double a24 = base * kb * kb;

  RDifferences out;
  if (mode == FormulaMode::paper_literal) {
    const cplx e31 = printed_radial_integral(PrintedRadial::ir11_00, p);
    const cplx e32 = printed_radial_integral(PrintedRadial::ir_sum_00, p);
    const cplx e33 = printed_radial_integral(PrintedRadial::ir_diff_BB, p);
    out.r13 = -2.0 * kI * a13 * (e31 * std::sin(2.0 * p.theta) + std::sin(p.theta) * e32) * i00;
    out.r24 = -4.0 * a24 * e33 * ibb;
    return out;
  }
  const cplx r11 = radial_derivative_integral({1, 1, z, z}, p, mode);
  const cplx r33 = radial_derivative_integral({-3, -3, z, z}, p, mode);
  const cplx b13 = radial_derivative_integral({1, -3, m, m}, p, mode);
  const cplx b31 = radial_derivative_integral({-3, 1, m, m}, p, mode);
  out.r13 = 2.0 * kI * a13 * std::sin(p.theta) * i00 * (r11 - r33);
  out.r24 = 4.0 * a24 * ibb * (b13 - b31);
  return out;
}

UncertaintyBound uncertainty_bound(const ModelParams& p, FormulaMode mode) {
  const RDifferences d = r_differences(p, mode);
  UncertaintyBound out;
  out.contribution_13 = d.r13;
  out.contribution_24 = d.r24;
  out.bound = 1.0 + std::abs(d.r13 + d.r24);
  return out;
}

std::vector<IntegralEntry> integral_table(const ModelParams& p, FormulaMode mode) {
  std::vector<IntegralEntry> out;
  constexpr Field fields[2] = {Field::zero, Field::magnetic};
  constexpr int lambdas[2] = {1, -3};
  for (Field b1 : fields) {
    for (Field b2 : fields) {
      cplx v;
      if (mode == FormulaMode::paper_literal) {
        v = angular_closed(b1, b2, p);
      } else if (mode == FormulaMode::quadrature) {
        v = angular_quadrature(b1, b2, p);
      } else {
        v = angular_overlap_general(scattering::angular_poly(p, b1),
                                    scattering::angular_poly(p, b2));
      }
      out.push_back({"Iphi[" + std::string(to_string(b1)) + "," + std::string(to_string(b2)) + "]", v});
    }
  }
  for (Field b1 : fields) {
    for (Field b2 : fields) {
      for (int l1 : lambdas) {
        for (int l2 : lambdas) {
          const IntegralKey key{l1, l2, b1, b2};
          out.push_back({"IR" + key.label(), radial_derivative_integral(key, p, mode)});
          out.push_back({"IN" + key.label(), radial_norm_integral(key, p, mode)});
        }
      }
    }
  }
  return out;
}

}  // namespace tiqm::integrals
