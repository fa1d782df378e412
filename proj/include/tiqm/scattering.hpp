#pragma once

#include <array>

#include "tiqm/oracle.hpp"
#include "tiqm/params.hpp"

// Separable scattering amplitudes A_{lb}(ρ, φ) = f_{λb}(ρ) g_b(φ), the four
// two-spin state coefficients C1..C4 and the state norm.
namespace tiqm::scattering {

// Below this |k_b| the radial kernel prefactor π/(8 k_b²) is rejected.
inline constexpr double kSingularMomentum = 1e-9;

// g_b(φ) = a0 + a1 cos φ + a2 cos² φ.
struct AngularPolynomial {
  cplx a0;
  cplx a1;
  cplx a2;

  cplx operator()(double phi) const;
};

// a0 = 1 - k_b²/2 - i(√π/2) k_b, a1 = (k_b + i√π/2) k, a2 = k²/2.
AngularPolynomial angular_poly(const ModelParams& p, Field b);

// f_{λb}(ρ) = π/(8 k_b²) e^{i k_b ρ} (λ/ρ³ + 8i k_b/ρ²), ρ >= 1.
// Throws Error(singular_configuration) for |k_b| < kSingularMomentum and
// Error(domain) for ρ < 1 or λ outside {1, -3}.
cplx radial_kernel(const ModelParams& p, int lambda, Field b, double rho);

// d f_{λb}/dρ = π/(8 k_b²) e^{i k_b ρ} [-8 k_b²/ρ² + i k_b (λ - 16)/ρ³ - 3λ/ρ⁴].
cplx radial_kernel_derivative(const ModelParams& p, int lambda, Field b, double rho);

// f_{λb}(ρ) g_b(φ) with λ = 1 - 4l².
cplx amplitude_closed(const ModelParams& p, int l, Field b, double rho, double phi);

// ∫ρ'dρ'dφ' K_l(-i k_b |r - r'|) |ψ_D(ρ')|² e^{i k ρ' cos φ'} by 2D quadrature
// with the normalized Gaussian dot density and exact Macdonald functions.
// Throws Error(non_convergence) when the 2D rule cannot self-converge.
cplx amplitude_direct(const ModelParams& p, int l, Field b, double rho, double phi,
                      const oracle::QuadratureSpec& spec = {});

enum class Variant {
  full,       // plane-wave terms kept, normalized at the evaluation point
  truncated,  // plane-wave terms dropped, normalized over the whole plane
};

std::string_view to_string(Variant v);

struct SpinorCoefficients {
  std::array<cplx, 4> c{};
  double norm_sq = 1.0;  // |C0|² the raw vector was divided by
  Variant variant = Variant::full;
};

// C1..C4 before division by C0; norm_sq holds Σ|Cᵢ|² at the point.
// Throws Error(zero_state) for the truncated variant with k_J = 0.
SpinorCoefficients raw_coefficients(const ModelParams& p, double rho, double phi,
                                    Variant variant);

// Normalized coefficients. The full variant is normalized pointwise; the
// truncated variant is divided by the global norm from norm_exact.
SpinorCoefficients coefficients(const ModelParams& p, double rho, double phi,
                                Variant variant);

// Divides by the Euclidean norm of c. Throws Error(zero_state) for c = 0.
SpinorCoefficients normalize_pointwise(const SpinorCoefficients& c);

enum class NormSource {
  sec3,  // (k² - 1/32) structure
  appD,  // (10 - 3cos θ)/128 and +5/64 structure
};

// Printed closed forms for |C0|² of the truncated state.
// Throws Error(divergence_band) when |k - 2k_B| <= kDivergenceBand.
double norm_closed_form(const ModelParams& p, NormSource source);

// |C0|² of the truncated state assembled from the exact radial and angular
// integrals. Same errors as norm_closed_form plus Error(zero_state) for k_J = 0.
double norm_exact(const ModelParams& p);

// ∫_1^∞ ρ dρ ∫_0^{2π} dφ Σ|Cᵢ|² of the raw truncated coefficients.
double norm_quadrature(const ModelParams& p, const oracle::QuadratureSpec& spec = {});

}  // namespace tiqm::scattering
