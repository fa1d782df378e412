#pragma once

#include <Eigen/Dense>
#include <array>
#include <string>
#include <vector>

#include "tiqm/oracle.hpp"
#include "tiqm/params.hpp"
#include "tiqm/scattering.hpp"

// Angular (I^φ), radial-derivative (I^R) and radial-normalization (I^N)
// integrals, orthogonal states, matrix-element combinations and the
// coordinate-momentum uncertainty bound.
namespace tiqm::integrals {

struct IntegralKey {
  int lambda1 = 1;  // 1 or -3
  int lambda2 = 1;
  Field b1 = Field::zero;
  Field b2 = Field::zero;

  // Throws Error(domain) for λ outside {1, -3}.
  void validate() const;
  // `[λ1,λ2,b1,b2]`, e.g. `[1,-3,0,B]`.
  std::string label() const;
};

enum class FormulaMode {
  derived,        // term-by-term closed forms, verified against quadrature
  paper_literal,  // the printed formulas
  quadrature,     // the numerical oracle
};

std::string_view to_string(FormulaMode m);

// ∫_0^{2π} g₁*(φ) g₂(φ) dφ from the moments of cos φ.
cplx angular_overlap_general(const scattering::AngularPolynomial& p1,
                             const scattering::AngularPolynomial& p2);

// The printed variant, whose middle term pairs a*_{0b1} with a_{2b1} and the
// last term uses a_{2b2} twice. Identical to the general form while a2 does
// not depend on the field.
cplx angular_overlap_printed(const scattering::AngularPolynomial& p1,
                             const scattering::AngularPolynomial& p2);

// Printed closed forms for I^φ_00, I^φ_BB, I^φ_0B and I^φ_B0 = (I^φ_0B)*.
cplx angular_closed(Field b1, Field b2, const ModelParams& p);

// Oracle: ∫_0^{2π} g_{b1}*(φ) g_{b2}(φ) dφ by adaptive quadrature.
cplx angular_quadrature(Field b1, Field b2, const ModelParams& p,
                        const oracle::QuadratureSpec& spec = {});

// Perturbation hook for the validation mutation check; scale = 1 is exact.
struct RadialTweak {
  double f3_scale = 1.0;
};

// I^R = ∫_1^∞ ρ f*_{λ1 b1}(ρ) f'_{λ2 b2}(ρ) dρ.
// Throws Error(singular_configuration) when either k_b vanishes.
cplx radial_derivative_integral(const IntegralKey& key, const ModelParams& p,
                                FormulaMode mode = FormulaMode::derived,
                                const RadialTweak& tweak = {});

// I^N = ∫_1^∞ ρ f*_{λ1 b1}(ρ) f_{λ2 b2}(ρ) dρ.
cplx radial_norm_integral(const IntegralKey& key, const ModelParams& p,
                          FormulaMode mode = FormulaMode::derived);

// Printed specializations of I^N. The two digits of each name are Bessel
// orders l (λ = 1 - 4l²); the second pair is (b1, b2).
enum class PrintedNorm { n00_00, n11_00, n00_BB, n11_BB, n10_00, n01_00, n10_BB, n01_BB };
inline constexpr std::array<PrintedNorm, 8> kPrintedNorms = {
    PrintedNorm::n00_00, PrintedNorm::n11_00, PrintedNorm::n00_BB, PrintedNorm::n11_BB,
    PrintedNorm::n10_00, PrintedNorm::n01_00, PrintedNorm::n10_BB, PrintedNorm::n01_BB};

std::string_view to_string(PrintedNorm which);
IntegralKey key_of(PrintedNorm which);
cplx printed_norm_integral(PrintedNorm which, const ModelParams& p);

// Printed specializations of I^R: I^R_{11,00}, I^R_{10,00} + I^R_{01,00} and
// I^R_{10,BB} - I^R_{01,BB}.
enum class PrintedRadial { ir11_00, ir_sum_00, ir_diff_BB };
inline constexpr std::array<PrintedRadial, 3> kPrintedRadials = {
    PrintedRadial::ir11_00, PrintedRadial::ir_sum_00, PrintedRadial::ir_diff_BB};

std::string_view to_string(PrintedRadial which);
cplx printed_radial_integral(PrintedRadial which, const ModelParams& p);
// The same combination built from radial_derivative_integral in `mode`.
// I^R_{11,00} is read with λ = (1, 1); the sum and difference use λ = (1, -3).
cplx radial_combination(PrintedRadial which, const ModelParams& p, FormulaMode mode);

struct OrthogonalWeights {
  cplx alpha1 = 0.0;
  cplx alpha2 = 1.0;
  cplx alpha3 = 0.0;

  // Throws Error(not_normalized) unless Σ|αᵢ|² = 1 within 1e-12.
  void validate() const;
};

// C⊥ = (α1C2 + α2C3 + α3C4, -α1C1 - α2C4 - α3C3,
//       α1C4 - α2C1 + α3C2, -α1C3 + α2C2 - α3C1).
scattering::SpinorCoefficients orthogonal_coefficients(const scattering::SpinorCoefficients& c,
                                                       const OrthogonalWeights& w);

// α1[R12 - R21 + R34 - R43] + α2[R13 - R31 - R24 + R42] + α3[R14 - R41 - R23 + R32]
// with R(i-1, k-1) = R_ik.
cplx matrix_element_combination(const Eigen::Matrix4cd& r, const OrthogonalWeights& w);

struct RDifferences {
  cplx r13;  // R13 - R31
  cplx r24;  // R24 - R42
};

// Antisymmetric ρ-derivative matrix elements of the truncated state.
// derived: exact integrals and exact norm. paper_literal: printed structure
// with the printed radial values and the (k² - 1/32) norm. quadrature:
// oracle integrals and oracle norm.
RDifferences r_differences(const ModelParams& p, FormulaMode mode = FormulaMode::derived);

struct UncertaintyBound {
  double bound = 1.0;
  cplx contribution_13;
  cplx contribution_24;
};

// 1 + |(R13 - R31) + (R24 - R42)|.
// Throws Error(divergence_band) near k = 2k_B and Error(zero_state) for k_J = 0.
UncertaintyBound uncertainty_bound(const ModelParams& p,
                                   FormulaMode mode = FormulaMode::derived);

struct IntegralEntry {
  std::string name;  // e.g. `IR[1,-3,0,B]`, `Iphi[0,B]`
  cplx value;
};

// Every I^φ, I^R and I^N for the given parameters in a fixed order.
std::vector<IntegralEntry> integral_table(const ModelParams& p,
                                          FormulaMode mode = FormulaMode::derived);

}  // namespace tiqm::integrals
