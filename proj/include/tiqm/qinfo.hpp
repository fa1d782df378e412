#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <vector>

#include "tiqm/scattering.hpp"

// Two-qubit guessing game: density matrices from C1..C4, Z/X post-measurement
// states, reductions, eigenvalues, entropies (bits) and a measurement sampler.
// Basis index of |a⟩_A|b⟩_B is 2a + b, so C1..C4 map to indices 0..3.
namespace tiqm::qinfo {

using Matrix4 = Eigen::Matrix4cd;
using Matrix2 = Eigen::Matrix2cd;

enum class Basis { Z, X };
enum class Subsystem { A, B };
enum class EigenMode { paper_literal, eigensolve };
enum class EigenQuantity { mu, lambda, xi, zeta };

std::string_view to_string(EigenMode m);

// Tolerance on Σ|Cᵢ|² - 1 accepted as normalized input.
inline constexpr double kNormTolerance = 1e-10;

// ρ_{iklm} = c_ik c*_lm. Throws Error(not_normalized) for Σ|Cᵢ|² != 1.
Matrix4 density_from_coefficients(const scattering::SpinorCoefficients& c);

// Dephases subsystem A in the chosen basis. For X the matrix is rotated to
// the φ basis, dephased there and rotated back, so the output stays in the
// computational basis.
Matrix4 project_measurement(const Matrix4& rho, Basis basis);

// C^(Φ) = (H ⊗ H) C, i.e. ½(C1+C2+C3+C4), ½(C1-C2+C3-C4),
// ½(C1+C2-C3-C4), ½(C1-C2-C3+C4).
scattering::SpinorCoefficients x_basis_coefficients(const scattering::SpinorCoefficients& c);

// The matrix in the φ basis of both spins, (H ⊗ H) ρ (H ⊗ H).
Matrix4 to_x_basis(const Matrix4& rho);

// Partial trace keeping `keep`.
Matrix2 reduce(const Matrix4& rho, Subsystem keep);

struct ClosedFormValue {
  double value = 0.0;
  bool clamped = false;       // value left [0, 1] and was clamped
  bool complex_root = false;  // radicand was negative and was set to 0
};

// μ = |C1|² + |C2|², λ = ½[1 + √(¼ - |C1C4* - C2*C3|²)], ξ and ζ the same
// with C^(Φ).
ClosedFormValue eigenvalues_closed_form(const scattering::SpinorCoefficients& c,
                                        EigenQuantity which);

// Real eigenvalues in descending order; 2×2 in closed form, larger sizes
// through a Hermitian eigensolver. Throws Error(not_hermitian).
std::vector<double> eigenvalues_numeric(const Eigen::MatrixXcd& m);

// h(x) = -x log₂x - (1-x) log₂(1-x). Throws Error(domain) outside [0, 1].
double binary_entropy(double x);

// -Σ λ log₂ λ over the spectrum of a density matrix.
double von_neumann_entropy(const Eigen::MatrixXcd& rho);

// c = max |⟨ψᵢ|φⱼ⟩|² over the eigenvectors of the two measured observables.
double complementarity(Basis first, Basis second);

struct EntropySummary {
  double mu = 0.0;
  double lambda = 0.0;
  double xi = 0.0;
  double zeta = 0.0;
  double S_AB = 0.0;
  double S_A = 0.0;
  double S_B = 0.0;
  double S_cond_AB = 0.0;
  double S_Z_AB = 0.0;
  double S_X_AB = 0.0;
  double S_Z_cond_B = 0.0;
  double S_X_cond_B = 0.0;
  double complementarity_term = 1.0;
  double memory = 0.0;  // [S(X|B) + S(Z|B)] - [log₂(1/c) + S(A|B)]
  EigenMode eigen_mode = EigenMode::eigensolve;
  bool flagged = false;  // a closed-form value was clamped or had a negative radicand
};

EntropySummary entropy_summary(const scattering::SpinorCoefficients& c,
                               EigenMode mode = EigenMode::eigensolve);

// Haar-random normalized C1..C4 drawn from the counter-based stream.
scattering::SpinorCoefficients random_pure_state(std::uint64_t seed, std::uint64_t index);

using Counts = std::array<std::uint64_t, 4>;

// Counter-based uniform draw in [0, 1) for sample `index` of stream `seed`.
double uniform_draw(std::uint64_t seed, std::uint64_t index);

// n samples of the joint (A, B) outcome in the given basis; bin 2a + b.
// Parallel over samples; identical to the serial reference for any thread count.
Counts sample_measurements(const scattering::SpinorCoefficients& c, Basis basis,
                           std::uint64_t n, std::uint64_t seed);
Counts sample_measurements_serial(const scattering::SpinorCoefficients& c, Basis basis,
                                  std::uint64_t n, std::uint64_t seed);

}  // namespace tiqm::qinfo
