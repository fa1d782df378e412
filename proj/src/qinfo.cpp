#include "tiqm/qinfo.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "tiqm/errors.hpp"

namespace tiqm::qinfo {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440084436210484904;

Matrix4 hadamard_pair() {
  Matrix2 h;
  h << kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2;
  Matrix4 u;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) u(2 * a + b, 2 * c + d) = h(a, c) * h(b, d);
  return u;
}

void require_normalized(const scattering::SpinorCoefficients& c) {
  double sum = 0.0;
  for (const cplx& v : c.c) sum += std::norm(v);
  if (std::abs(sum - 1.0) > kNormTolerance) {
    throw Error(ErrorCode::not_normalized, "coefficients must satisfy sum |C|^2 = 1");
  }
}

ClosedFormValue clamp_unit(double v, bool complex_root) {
  ClosedFormValue out;
  out.complex_root = complex_root;
  out.value = std::clamp(v, 0.0, 1.0);
  out.clamped = out.value != v;
  return out;
}

ClosedFormValue printed_lambda(const std::array<cplx, 4>& c) {
  const double overlap = std::norm(c[0] * std::conj(c[3]) - std::conj(c[1]) * c[2]);
  double radicand = 0.25 - overlap;
  const bool negative = radicand < 0.0;
  if (negative) radicand = 0.0;
  return clamp_unit(0.5 * (1.0 + std::sqrt(radicand)), negative);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::array<double, 4> outcome_probabilities(const scattering::SpinorCoefficients& c,
                                            Basis basis) {
  require_normalized(c);
  const scattering::SpinorCoefficients v =
      basis == Basis::Z ? c : x_basis_coefficients(c);
  std::array<double, 4> p{};
  for (int i = 0; i < 4; ++i) p[i] = std::norm(v.c[i]);
  return p;
}

int pick_bin(const std::array<double, 4>& p, double u) {
  double acc = 0.0;
  for (int i = 0; i < 3; ++i) {
    acc += p[i];
    if (u < acc) return i;
  }
  return 3;
}

}  // namespace

std::string_view to_string(EigenMode m) {
  return m == EigenMode::eigensolve ? "eigensolve" : "paper_literal";
}

Matrix4 density_from_coefficients(const scattering::SpinorCoefficients& c) {
  require_normalized(c);
  Eigen::Vector4cd v(c.c[0], c.c[1], c.c[2], c.c[3]);
  return v * v.adjoint();
}

Matrix4 project_measurement(const Matrix4& rho, Basis basis) {
  const Matrix4 u = hadamard_pair();
  Matrix4 m = basis == Basis::Z ? rho : Matrix4(u * rho * u.adjoint());
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i / 2 != j / 2) m(i, j) = 0.0;
  if (basis == Basis::X) m = u.adjoint() * m * u;
  return m;
}

scattering::SpinorCoefficients x_basis_coefficients(const scattering::SpinorCoefficients& c) {
  const auto& [c1, c2, c3, c4] = c.c;
  scattering::SpinorCoefficients out = c;
  out.c = {0.5 * (c1 + c2 + c3 + c4), 0.5 * (c1 - c2 + c3 - c4),
           0.5 * (c1 + c2 - c3 - c4), 0.5 * (c1 - c2 - c3 + c4)};
  return out;
}

Matrix4 to_x_basis(const Matrix4& rho) {
  const Matrix4 u = hadamard_pair();
  return u * rho * u.adjoint();
}

Matrix2 reduce(const Matrix4& rho, Subsystem keep) {
  Matrix2 out = Matrix2::Zero();
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k)
      for (int m = 0; m < 2; ++m) {
        if (keep == Subsystem::A) {
          out(i, k) += rho(2 * i + m, 2 * k + m);
        } else {
          out(i, k) += rho(2 * m + i, 2 * m + k);
        }
      }
  return out;
}

ClosedFormValue eigenvalues_closed_form(const scattering::SpinorCoefficients& c,
                                        EigenQuantity which) {
  require_normalized(c);
  switch (which) {
    case EigenQuantity::mu: return clamp_unit(std::norm(c.c[0]) + std::norm(c.c[1]), false);
    case EigenQuantity::lambda: return printed_lambda(c.c);
    case EigenQuantity::xi: {
      const auto x = x_basis_coefficients(c);
      return clamp_unit(std::norm(x.c[0]) + std::norm(x.c[1]), false);
    }
    case EigenQuantity::zeta: return printed_lambda(x_basis_coefficients(c).c);
  }
  throw Error(ErrorCode::domain, "unknown eigenvalue quantity");
}

std::vector<double> eigenvalues_numeric(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw Error(ErrorCode::domain, "eigenvalues need a non-empty square matrix");
  }
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw Error(ErrorCode::not_hermitian, "matrix is not Hermitian");
  }
  std::vector<double> out;
  if (m.rows() == 2) {
    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    const double r = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(m(0, 1)));
    out = {0.5 * (a + d) + r, 0.5 * (a + d) - r};
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    if (solver.info() != Eigen::Success) {
      throw Error(ErrorCode::non_convergence, "Hermitian eigensolver failed");
    }
    const Eigen::VectorXd ev = solver.eigenvalues();
    const Eigen::MatrixXcd vecs = solver.eigenvectors();
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
      const double res = (m * vecs.col(i) - ev(i) * vecs.col(i)).norm();
      if (res > 1e-10 * scale) {
        throw Error(ErrorCode::non_convergence, "eigen residual above tolerance");
      }
      out.push_back(ev(i));
    }
    std::sort(out.begin(), out.end(), std::greater<>());
  }
  return out;
}

double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw Error(ErrorCode::domain, "h(x) needs x in [0, 1]");
  auto term = [](double v) { return v > 0.0 ? -v * std::log2(v) : 0.0; };
  return term(x) + term(1.0 - x);
}

double von_neumann_entropy(const Eigen::MatrixXcd& rho) {
  double s = 0.0;
  for (double v : eigenvalues_numeric(rho)) {
    if (v > 1e-300) s -= v * std::log2(v);
  }
  return s;
}

double complementarity(Basis first, Basis second) {
  auto vectors = [](Basis b) {
    Matrix2 v;
    if (b == Basis::Z) {
      v.setIdentity();
    } else {
      v << kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2;
    }
    return v;
  };
  const Matrix2 overlaps = vectors(first).adjoint() * vectors(second);
  return overlaps.cwiseAbs2().maxCoeff();
}

EntropySummary entropy_summary(const scattering::SpinorCoefficients& c, EigenMode mode) {
  require_normalized(c);
  EntropySummary s;
  s.eigen_mode = mode;
  s.complementarity_term = std::log2(1.0 / complementarity(Basis::Z, Basis::X));

  if (mode == EigenMode::paper_literal) {
    const ClosedFormValue mu = eigenvalues_closed_form(c, EigenQuantity::mu);
    const ClosedFormValue lam = eigenvalues_closed_form(c, EigenQuantity::lambda);
    const ClosedFormValue xi = eigenvalues_closed_form(c, EigenQuantity::xi);
    const ClosedFormValue zeta = eigenvalues_closed_form(c, EigenQuantity::zeta);
    s.flagged = mu.clamped || lam.clamped || lam.complex_root || xi.clamped ||
                zeta.clamped || zeta.complex_root;
    s.mu = mu.value;
    s.lambda = lam.value;
    s.xi = xi.value;
    s.zeta = zeta.value;
    const double hl = binary_entropy(s.lambda);
    s.S_AB = 0.0;
    s.S_A = s.S_B = hl;
    s.S_cond_AB = -hl;
    s.S_Z_AB = binary_entropy(s.mu);
    s.S_Z_cond_B = s.S_Z_AB - hl;
    s.S_X_AB = binary_entropy(s.xi);
    s.S_X_cond_B = s.S_X_AB - binary_entropy(s.zeta);
  } else {
    const Matrix4 rho = density_from_coefficients(c);
    const Matrix4 rz = project_measurement(rho, Basis::Z);
    const Matrix4 rx = project_measurement(rho, Basis::X);
    const Matrix2 rb = reduce(rho, Subsystem::B);
    const Matrix4 rx_phi = to_x_basis(rx);
    s.mu = std::clamp((rz(0, 0) + rz(1, 1)).real(), 0.0, 1.0);
    s.xi = std::clamp((rx_phi(0, 0) + rx_phi(1, 1)).real(), 0.0, 1.0);
    s.lambda = std::clamp(eigenvalues_numeric(rb).front(), 0.0, 1.0);
    s.zeta = std::clamp(eigenvalues_numeric(reduce(rx_phi, Subsystem::B)).front(), 0.0, 1.0);
    s.S_AB = std::max(0.0, von_neumann_entropy(rho));
    s.S_A = von_neumann_entropy(reduce(rho, Subsystem::A));
    s.S_B = von_neumann_entropy(rb);
    s.S_cond_AB = s.S_AB - s.S_B;
    s.S_Z_AB = von_neumann_entropy(rz);
    s.S_X_AB = von_neumann_entropy(rx);
    s.S_Z_cond_B = s.S_Z_AB - s.S_B;
    s.S_X_cond_B = s.S_X_AB - s.S_B;
  }
  s.memory = (s.S_X_cond_B + s.S_Z_cond_B) - (s.complementarity_term + s.S_cond_AB);
  return s;
}

double uniform_draw(std::uint64_t seed, std::uint64_t index) {
  const std::uint64_t x = splitmix64(splitmix64(seed) ^ (index * 0xd1b54a32d192ed03ULL));
  return static_cast<double>(x >> 11) * 0x1.0p-53;
}

scattering::SpinorCoefficients random_pure_state(std::uint64_t seed, std::uint64_t index) {
  double g[8];
  for (int j = 0; j < 8; j += 2) {
    const double u1 = 1.0 - uniform_draw(seed, 8 * index + j);
    const double u2 = uniform_draw(seed, 8 * index + j + 1);
    const double r = std::sqrt(-2.0 * std::log(u1));
    g[j] = r * std::cos(2.0 * kPi * u2);
    g[j + 1] = r * std::sin(2.0 * kPi * u2);
  }
  scattering::SpinorCoefficients c;
  for (int i = 0; i < 4; ++i) c.c[i] = cplx(g[2 * i], g[2 * i + 1]);
  return scattering::normalize_pointwise(c);
}

Counts sample_measurements_serial(const scattering::SpinorCoefficients& c, Basis basis,
                                  std::uint64_t n, std::uint64_t seed) {
  const std::array<double, 4> p = outcome_probabilities(c, basis);
  Counts counts{};
  for (std::uint64_t i = 0; i < n; ++i) ++counts[pick_bin(p, uniform_draw(seed, i))];
  return counts;
}

Counts sample_measurements(const scattering::SpinorCoefficients& c, Basis basis,
                           std::uint64_t n, std::uint64_t seed) {
  const std::array<double, 4> p = outcome_probabilities(c, basis);
  std::uint64_t c0 = 0, c1 = 0, c2 = 0, c3 = 0;
  const auto total = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static) reduction(+ : c0, c1, c2, c3)
  for (std::int64_t i = 0; i < total; ++i) {
    switch (pick_bin(p, uniform_draw(seed, static_cast<std::uint64_t>(i)))) {
      case 0: ++c0; break;
      case 1: ++c1; break;
      case 2: ++c2; break;
      default: ++c3; break;
    }
  }
  return {c0, c1, c2, c3};
}

}  // namespace tiqm::qinfo
