#include <doctest.h>

#include <cmath>
#include <functional>

#include "reference_values.hpp"
#include "tiqm/errors.hpp"
#include "tiqm/integrals.hpp"
#include "tiqm/qinfo.hpp"

using namespace tiqm;
using namespace tiqm::integrals;

namespace {

ModelParams params(double k, double kB, double theta = kPi / 4.0, double kJ = 1.0) {
  ModelParams p;
  p.k = k;
  p.kB = kB;
  p.theta = theta;
  p.kJ = kJ;
  return p;
}

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

Field field(bool b) { return b ? Field::magnetic : Field::zero; }

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

TEST_CASE("IntegralKey validation and label") {
  IntegralKey key{1, -3, Field::zero, Field::magnetic};
  CHECK(key.label() == "[1,-3,0,B]");
  CHECK_NOTHROW(key.validate());
  key.lambda1 = 2;
  CHECK(code_of([&] { key.validate(); }) == ErrorCode::domain);
}

TEST_CASE("angular overlaps match frozen values") {
  for (const auto& r : reference::kAngularReference) {
    const ModelParams p = params(r.k, r.kB);
    const auto g1 = scattering::angular_poly(p, field(r.b1_field));
    const auto g2 = scattering::angular_poly(p, field(r.b2_field));
    CHECK(rel(angular_overlap_general(g1, g2), r.value) < 1e-13);
    CHECK(rel(angular_quadrature(field(r.b1_field), field(r.b2_field), p), r.value) < 1e-12);
    // The printed variant coincides because a2 is field independent.
    CHECK(rel(angular_overlap_printed(g1, g2), r.value) < 1e-13);
  }
}

TEST_CASE("printed angular closed forms on the diagonal") {
  for (double k : {0.5, 1.0, 2.0}) {
    for (double ratio : {0.0, 0.3, 1.0}) {
      const ModelParams p = params(k, ratio * k);
      for (Field b : {Field::zero, Field::magnetic}) {
        CHECK(rel(angular_closed(b, b, p), angular_quadrature(b, b, p)) < 1e-12);
      }
    }
  }
}

TEST_CASE("radial integrals match frozen values in derived and quadrature modes") {
  for (const auto& r : reference::kIntegralReference) {
    const ModelParams p = params(r.k, r.kB);
    const IntegralKey key{r.lambda1, r.lambda2, field(r.b1_field), field(r.b2_field)};
    CAPTURE(p.describe());
    CAPTURE(key.label());
    CHECK(rel(radial_norm_integral(key, p), r.norm) < 1e-10);
    CHECK(rel(radial_derivative_integral(key, p), r.derivative) < 1e-10);
    CHECK(rel(radial_norm_integral(key, p, FormulaMode::quadrature), r.norm) < 1e-7);
    CHECK(rel(radial_derivative_integral(key, p, FormulaMode::quadrature), r.derivative) < 1e-7);
  }
}

TEST_CASE("radial integral symmetries") {
  const ModelParams p = params(1.2, 0.35);
  for (Field b1 : {Field::zero, Field::magnetic}) {
    for (Field b2 : {Field::zero, Field::magnetic}) {
      const cplx a = radial_norm_integral({1, -3, b1, b2}, p);
      const cplx b = radial_norm_integral({-3, 1, b2, b1}, p);
      CHECK(rel(a, std::conj(b)) < 1e-13);
    }
  }
  CHECK(code_of([&] { radial_norm_integral({1, 1, Field::magnetic, Field::zero}, params(1.0, 0.5)); }) ==
        ErrorCode::singular_configuration);
}

TEST_CASE("the radial tweak perturbs only the derived derivative integral") {
  const ModelParams p = params(1.0, 0.25);
  const IntegralKey key{1, -3, Field::zero, Field::zero};
  const cplx base = radial_derivative_integral(key, p);
  const cplx bent = radial_derivative_integral(key, p, FormulaMode::derived, RadialTweak{1.001});
  CHECK(rel(bent, base) > 1e-5);
}

TEST_CASE("printed norm specializations and their index mapping") {
  CHECK(key_of(PrintedNorm::n10_00).lambda1 == -3);
  CHECK(key_of(PrintedNorm::n10_00).lambda2 == 1);
  CHECK(key_of(PrintedNorm::n01_BB).b1 == Field::magnetic);
  CHECK(to_string(PrintedNorm::n00_BB) == "IN_00_BB");
  // The zero-field entries match the oracle.
  const ModelParams p = params(1.0, 0.25);
  for (PrintedNorm w : {PrintedNorm::n00_00, PrintedNorm::n11_00}) {
    CHECK(rel(printed_norm_integral(w, p), radial_norm_integral(key_of(w), p)) < 1e-12);
  }
  // At k_B = 0 the field entry carries a factor two that the oracle does not.
  const ModelParams q = params(1.0, 0.0);
  const cplx ratio = printed_norm_integral(PrintedNorm::n00_BB, q) /
                     printed_norm_integral(PrintedNorm::n00_00, q);
  CHECK(std::abs(ratio - 2.0) < 1e-12);
  const cplx oracle_ratio = radial_norm_integral(key_of(PrintedNorm::n00_BB), q) /
                            radial_norm_integral(key_of(PrintedNorm::n00_00), q);
  CHECK(std::abs(oracle_ratio - 1.0) < 1e-12);
}

TEST_CASE("printed radial combinations") {
  const ModelParams p = params(1.0, 0.25);
  CHECK(printed_radial_integral(PrintedRadial::ir_diff_BB, p) == cplx(0.0));
  const cplx diff = radial_combination(PrintedRadial::ir_diff_BB, p, FormulaMode::derived);
  CHECK(std::abs(diff) > 1.0);
  CHECK(rel(diff, radial_derivative_integral({-3, 1, Field::magnetic, Field::magnetic}, p) -
                      radial_derivative_integral({1, -3, Field::magnetic, Field::magnetic}, p)) < 1e-15);
}

TEST_CASE("orthogonal weights validation") {
  CHECK_NOTHROW(OrthogonalWeights{}.validate());
  OrthogonalWeights w{1.0, 1.0, 0.0};
  CHECK(code_of([&] { w.validate(); }) == ErrorCode::not_normalized);
}

TEST_CASE("orthogonal_coefficients") {
  const OrthogonalWeights w{cplx(0.6, 0.0), cplx(0.0, 0.48), cplx(0.64, 0.0)};
  for (int i = 0; i < 10; ++i) {
    const auto c = qinfo::random_pure_state(77, i);
    const auto perp = orthogonal_coefficients(c, w);
    cplx bilinear = 0.0;
    for (int j = 0; j < 4; ++j) bilinear += c.c[j] * perp.c[j];
    CHECK(std::abs(bilinear) < 1e-15);
    // A single weight permutes the coefficients with signs, so the norm is kept.
    const auto single = orthogonal_coefficients(c, {0.0, 0.0, 1.0});
    double n = 0.0;
    for (const cplx& v : single.c) n += std::norm(v);
    CHECK(std::abs(n - 1.0) < 1e-14);
  }
  // For real coefficients the bilinear and Hermitian products coincide.
  scattering::SpinorCoefficients real;
  real.c = {0.5, -0.1, 0.7, std::sqrt(1.0 - 0.25 - 0.01 - 0.49)};
  const auto perp = orthogonal_coefficients(real, {1.0, 0.0, 0.0});
  cplx herm = 0.0;
  for (int j = 0; j < 4; ++j) herm += std::conj(perp.c[j]) * real.c[j];
  CHECK(std::abs(herm) < 1e-15);
}

TEST_CASE("matrix_element_combination selects the antisymmetric parts") {
  Eigen::Matrix4cd r = Eigen::Matrix4cd::Zero();
  r(0, 2) = cplx(2.0, 1.0);
  r(2, 0) = cplx(0.5, 0.0);
  CHECK(std::abs(matrix_element_combination(r, {0.0, 1.0, 0.0}) - cplx(1.5, 1.0)) < 1e-15);
  CHECK(std::abs(matrix_element_combination(r, {1.0, 0.0, 0.0})) < 1e-15);
  r.setZero();
  r(1, 2) = 3.0;
  CHECK(std::abs(matrix_element_combination(r, {0.0, 0.0, 1.0}) + 3.0) < 1e-15);
}

TEST_CASE("r_differences in derived and quadrature modes") {
  const ModelParams p = params(1.0, 0.25);
  const RDifferences d = r_differences(p);
  const RDifferences q = r_differences(p, FormulaMode::quadrature);
  CHECK(rel(d.r13, q.r13) < 1e-6);
  CHECK(rel(d.r24, q.r24) < 1e-6);
  // θ = 0 removes the R13 contribution but not R24.
  const RDifferences z = r_differences(params(1.0, 0.25, 0.0));
  CHECK(z.r13 == cplx(0.0));
  CHECK(std::abs(z.r24) > 0.1);
}

TEST_CASE("uncertainty_bound") {
  const ModelParams p = params(1.0, 0.25);
  const UncertaintyBound b = uncertainty_bound(p);
  CHECK(b.bound >= 1.0);
  CHECK(b.bound == doctest::Approx(1.0 + std::abs(b.contribution_13 + b.contribution_24)));
  CHECK(uncertainty_bound(params(1.0, 0.25, 0.0), FormulaMode::paper_literal).bound == 1.0);
  CHECK(code_of([&] { uncertainty_bound(params(1.0, 0.5)); }) == ErrorCode::divergence_band);
  CHECK(code_of([&] { uncertainty_bound(params(1.0, 0.25, 0.3, 0.0)); }) == ErrorCode::zero_state);
}

TEST_CASE("integral_table layout") {
  const auto t = integral_table(params(1.0, 0.25));
  REQUIRE(t.size() == 36);
  CHECK(t.front().name == "Iphi[0,0]");
  CHECK(t[4].name == "IR[1,1,0,0]");
  CHECK(t[5].name == "IN[1,1,0,0]");
  CHECK(t.back().name == "IN[-3,-3,B,B]");
}
