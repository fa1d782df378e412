#include <doctest.h>

#include <cmath>

#include "reference_values.hpp"
#include "tiqm/errors.hpp"
#include "tiqm/scattering.hpp"
#include "tiqm/specfun.hpp"

using namespace tiqm;
using namespace tiqm::scattering;

namespace {

ModelParams params(double k, double kB, double theta = kPi / 4.0, double kJ = 1.0) {
  ModelParams p;
  p.k = k;
  p.kB = kB;
  p.theta = theta;
  p.kJ = kJ;
  return p;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::config;
}

}  // namespace

TEST_CASE("angular_poly coefficients") {
  const ModelParams p = params(2.0, 0.25);
  const AngularPolynomial g = angular_poly(p, Field::magnetic);
  const double kb = 1.5;
  CHECK(std::abs(g.a0 - cplx(1.0 - kb * kb / 2.0, -std::sqrt(kPi) / 2.0 * kb)) < 1e-15);
  CHECK(std::abs(g.a1 - cplx(kb, std::sqrt(kPi) / 2.0) * 2.0) < 1e-15);
  CHECK(std::abs(g.a2 - 2.0) < 1e-15);
  CHECK(std::abs(g(0.0) - (g.a0 + g.a1 + g.a2)) < 1e-15);
  // a2 does not depend on the field.
  CHECK(angular_poly(p, Field::zero).a2 == g.a2);
}

TEST_CASE("radial_kernel_derivative matches a central difference") {
  const ModelParams p = params(1.3, 0.2);
  for (int lambda : {1, -3}) {
    for (Field b : {Field::zero, Field::magnetic}) {
      for (double rho : {1.5, 4.0, 11.0}) {
        const double h = 1e-5;
        const cplx fd =
            (radial_kernel(p, lambda, b, rho + h) - radial_kernel(p, lambda, b, rho - h)) / (2.0 * h);
        const cplx d = radial_kernel_derivative(p, lambda, b, rho);
        CHECK(std::abs(fd - d) / std::abs(d) < 1e-8);
      }
    }
  }
}

TEST_CASE("radial_kernel error paths") {
  const ModelParams p = params(1.0, 0.25);
  CHECK(code_of([&] { radial_kernel(p, 2, Field::zero, 2.0); }) == ErrorCode::domain);
  CHECK(code_of([&] { radial_kernel(p, 1, Field::zero, 0.5); }) == ErrorCode::domain);
  CHECK(code_of([&] { radial_kernel(params(1.0, 0.5), 1, Field::magnetic, 2.0); }) ==
        ErrorCode::singular_configuration);
  CHECK(code_of([&] { amplitude_closed(p, 2, Field::zero, 2.0, 0.0); }) == ErrorCode::range);
}

TEST_CASE("amplitude_closed is the product of its radial and angular parts") {
  const ModelParams p = params(0.8, 0.1);
  for (int l : {0, 1}) {
    const cplx a = amplitude_closed(p, l, Field::magnetic, 3.0, 0.7);
    CHECK(std::abs(a - radial_kernel(p, lambda_of(l), Field::magnetic, 3.0) *
                           angular_poly(p, Field::magnetic)(0.7)) < 1e-15);
  }
}

TEST_CASE("amplitude_direct reduces to the bare Macdonald function for a point-like dot") {
  ModelParams p = params(1.0, 0.25);
  p.lB = 0.02;
  for (int l : {0, 1}) {
    const double rho = 6.0;
    const cplx direct = amplitude_direct(p, l, Field::zero, rho, 0.4);
    const cplx point = specfun::macdonald_imag(l, p.k * rho);
    CHECK(std::abs(direct - point) / std::abs(point) < 2e-3);
  }
}

TEST_CASE("raw_coefficients in the absence of exchange") {
  const ModelParams p = params(1.0, 0.25, 0.6, 0.0);
  const SpinorCoefficients c = raw_coefficients(p, 2.0, 0.3, Variant::full);
  CHECK(c.c[1] == cplx(0.0));
  CHECK(c.c[3] == cplx(0.0));
  CHECK(std::abs(c.c[2] - c.c[0] * std::polar(1.0, 0.6)) < 1e-15);
  CHECK(code_of([&] { raw_coefficients(p, 2.0, 0.3, Variant::truncated); }) == ErrorCode::zero_state);
}

TEST_CASE("coefficients normalization by variant") {
  const ModelParams p = params(1.0, 0.25);
  const SpinorCoefficients full = coefficients(p, 4.0, 0.2, Variant::full);
  double s = 0.0;
  for (const cplx& v : full.c) s += std::norm(v);
  CHECK(std::abs(s - 1.0) < 1e-14);
  CHECK(full.variant == Variant::full);

  const SpinorCoefficients raw = raw_coefficients(p, 4.0, 0.2, Variant::truncated);
  const SpinorCoefficients trunc = coefficients(p, 4.0, 0.2, Variant::truncated);
  const double n = norm_exact(p);
  for (int i = 0; i < 4; ++i) CHECK(std::abs(trunc.c[i] - raw.c[i] / std::sqrt(n)) < 1e-15);
  CHECK(trunc.norm_sq == doctest::Approx(n));
}

TEST_CASE("normalize_pointwise rejects the zero vector") {
  SpinorCoefficients z;
  z.c = {0.0, 0.0, 0.0, 0.0};
  CHECK(code_of([&] { normalize_pointwise(z); }) == ErrorCode::zero_state);
}

TEST_CASE("norm_exact matches the frozen double integral") {
  for (const auto& r : reference::kNormReference) {
    const ModelParams p = params(r.k, r.kB, r.theta, r.kJ);
    CAPTURE(p.describe());
    CHECK(std::abs(norm_exact(p) - r.value) / r.value < 1e-12);
    CHECK(std::abs(norm_quadrature(p) - r.value) / r.value < 1e-7);
  }
}

TEST_CASE("norm functions reject the divergence band") {
  const ModelParams p = params(1.0, 0.5);
  CHECK(code_of([&] { norm_exact(p); }) == ErrorCode::divergence_band);
  CHECK(code_of([&] { norm_closed_form(p, NormSource::sec3); }) == ErrorCode::divergence_band);
  CHECK(code_of([&] { norm_exact(params(1.0, 0.4996)); }) == ErrorCode::divergence_band);
  CHECK_NOTHROW(norm_exact(params(1.0, 0.498)));
}

TEST_CASE("printed norms differ from the exact norm") {
  const ModelParams p = params(1.0, 0.25);
  const double exact = norm_exact(p);
  CHECK(std::abs(norm_closed_form(p, NormSource::appD) - exact) / exact > 0.1);
  CHECK(std::abs(norm_closed_form(p, NormSource::sec3) - exact) / exact > 0.1);
}
