#include "tiqm/validate.hpp"

#include <cmath>
#include <cstdio>
#include <functional>

#include "tiqm/errors.hpp"
#include "tiqm/qinfo.hpp"
#include "tiqm/specfun.hpp"
#include "tiqm/sweep.hpp"

namespace tiqm::validate {

namespace {

using integrals::FormulaMode;
using integrals::IntegralKey;
using scattering::Variant;

std::string fmt(const char* pattern, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, a, b);
  return buf;
}

ModelParams make_params(double k, double ratio, double theta = kPi / 4.0, double kj = -1.0) {
  ModelParams p;
  p.k = k;
  p.kB = ratio * k;
  p.theta = theta;
  p.kJ = kj < 0.0 ? k : kj;
  return p;
}

class Battery {
 public:
  explicit Battery(const ValidationOptions& o) : options_(o) {}

  // Runs one check; exceptions count as failures.
  void check(const std::string& name, const std::function<std::string(bool&)>& body) {
    CheckResult r;
    r.name = name;
    try {
      bool ok = true;
      r.detail = body(ok);
      r.passed = ok;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    report_.checks.push_back(std::move(r));
  }

  DiscrepancyLedger& ledger() { return ledger_; }
  const ValidationOptions& options() const { return options_; }

  ValidationReport finish() {
    report_.ledger = ledger_.records();
    return std::move(report_);
  }

 private:
  ValidationOptions options_;
  ValidationReport report_;
  DiscrepancyLedger ledger_;
};

// Worst relative deviation tracker.
struct Worst {
  double value = 0.0;
  std::string where;
  void update(double rel, const std::string& at) {
    if (rel > value || !std::isfinite(rel)) {
      value = rel;
      where = at;
    }
  }
};

void specfun_checks(Battery& b) {
  b.check("exp_integral_e1", [](bool& ok) {
    // E1(z) = ∫_1^∞ e^{-zt}/t dt for Re z > 0.
    Worst w;
    for (cplx z : {cplx(1.0, 0.0), cplx(0.5, 2.0), cplx(3.0, -1.0), cplx(6.0, 4.0)}) {
      const double upper = 1.0 + 60.0 / z.real();
      oracle::QuadratureSpec spec;
      spec.abs_tol = 1e-16;
      spec.rel_tol = 1e-13;
      const cplx ref = oracle::integrate_interval(
                           [z](double t) { return std::exp(-z * t) / t; }, 1.0, upper, spec)
                           .value;
      w.update(relative_difference(specfun::exp_integral_e1(z), ref), "");
      w.update(std::abs(specfun::exp_integral_e1(std::conj(z)) -
                        std::conj(specfun::exp_integral_e1(z))) /
                   std::abs(ref),
               "");
    }
    ok = w.value < 1e-11;
    return fmt("max rel err %.3g", w.value);
  });

  b.check("upper_gamma_neg", [](bool& ok) {
    // Γ(a+1, z) = aΓ(a, z) + z^a e^{-z}.
    Worst w;
    for (int i = 0; i < 100; ++i) {
      const double r = 0.1 * std::pow(100.0, qinfo::uniform_draw(11, 2 * i));
      const double t = kPi * (2.0 * qinfo::uniform_draw(11, 2 * i + 1) - 1.0) * 0.95;
      const cplx z = std::polar(r, t);
      for (int n = 2; n <= 5; ++n) {
        const cplx up = -static_cast<double>(n) * specfun::upper_gamma_neg(n, z) +
                        std::pow(z, -n) * std::exp(-z);
        w.update(relative_difference(up, specfun::upper_gamma_neg(n - 1, z)), "");
      }
    }
    ok = w.value < 1e-9;
    return fmt("max rel err %.3g", w.value);
  });

  b.check("gamma_scaled", [](bool& ok) {
    // Continuity across the switch to the analytic limit, and the n z^n Γ(-n, z) -> 1 limit.
    double jump = 0.0;
    double limit = 0.0;
    for (int n = 1; n <= 5; ++n) {
      for (double t : {0.0, kPi / 2.0, -kPi / 2.0}) {
        const cplx below = specfun::gamma_scaled(n, std::polar(0.999 * specfun::kGammaLimitEps, t));
        const cplx above = specfun::gamma_scaled(n, std::polar(1.001 * specfun::kGammaLimitEps, t));
        jump = std::max(jump, std::abs(below - above));
        if (n >= 2) {
          limit = std::max(limit,
                           std::abs(specfun::gamma_scaled(n, std::polar(1e-3, t)) * double(n) - 1.0));
        }
      }
    }
    ok = jump <= 1e-6 && limit <= 5e-3;
    return fmt("max jump %.3g, max |n z^n G(-n,z) - 1| at |z| = 1e-3: %.3g", jump, limit);
  });

  b.check("erf_complex", [](bool& ok) {
    Worst w;
    for (double x = -4.0; x <= 4.0; x += 0.25) {
      w.update(std::abs(specfun::erf_complex(x).value - std::erf(x)) /
                   std::max(1e-300, std::abs(std::erf(x))) * (x == 0.0 ? 0.0 : 1.0),
               "");
    }
    for (cplx z : {cplx(0.3, 1.2), cplx(2.5, -0.7), cplx(-1.0, 3.0)}) {
      const cplx v = specfun::erf_complex(z).value;
      w.update(std::abs(specfun::erf_complex(-z).value + v) / std::abs(v), "");
      w.update(std::abs(specfun::erf_complex(std::conj(z)).value - std::conj(v)) / std::abs(v), "");
    }
    ok = w.value < 1e-10;
    return fmt("max rel err %.3g", w.value);
  });

  b.check("bessel_k_asymptotic", [&b](bool& ok) {
    Worst w;
    for (int l = 0; l <= 1; ++l) {
      const double z = 20.0;
      oracle::QuadratureSpec spec;
      spec.abs_tol = 1e-30;
      spec.rel_tol = 1e-12;
      const cplx ref = oracle::integrate_interval(
                           [&](double t) { return cplx(std::exp(-z * std::cosh(t)) * std::cosh(l * t)); },
                           0.0, 6.0, spec)
                           .value;
      const cplx standard = specfun::bessel_k_asymptotic(l, z, specfun::BesselPrefactor::standard);
      w.update(relative_difference(standard, ref), "");
      b.ledger().compare("bessel_k_asymptotic_l" + std::to_string(l), "z=20",
                         specfun::bessel_k_asymptotic(l, z), ref, 1e-2);
    }
    ok = w.value < 1e-2;
    return fmt("standard prefactor max rel err %.3g", w.value);
  });

  b.check("macdonald_imag", [](bool& ok) {
    Worst w;
    for (int l = 0; l <= 1; ++l) {
      for (double x : {50.0, 80.0}) {
        const cplx z(0.0, -x);
        const cplx asym = specfun::bessel_k_asymptotic(l, z, specfun::BesselPrefactor::standard);
        w.update(relative_difference(specfun::macdonald_imag(l, x), asym), "");
      }
    }
    ok = w.value < 1e-4;
    return fmt("max rel diff to asymptotic %.3g", w.value);
  });
}

void oracle_checks(Battery& b) {
  b.check("integrate_radial", [](bool& ok) {
    const cplx a = oracle::integrate_radial([](double r) { return cplx(1.0 / (r * r)); }, 0.0).value;
    // ∫_1^∞ e^{iρ}/ρ² dρ = (-i) Γ(-1, -i).
    const cplx osc = oracle::integrate_radial(
                         [](double r) { return std::polar(1.0 / (r * r), r); }, 1.0)
                         .value;
    const cplx ref = cplx(0.0, -1.0) * specfun::upper_gamma_neg(1, cplx(0.0, -1.0));
    const double e1 = std::abs(a - 1.0);
    const double e2 = relative_difference(osc, ref);
    ok = e1 < 1e-8 && e2 < 1e-7;
    return fmt("1/rho^2 err %.3g, oscillatory rel err %.3g", e1, e2);
  });

  b.check("integrate_angular", [](bool& ok) {
    const double e1 = std::abs(oracle::integrate_angular([](double) { return cplx(1.0); }).value -
                               2.0 * kPi);
    const double e2 = std::abs(oracle::integrate_angular([](double t) {
                                 return cplx(std::cos(t) * std::cos(t));
                               }).value -
                               kPi);
    ok = e1 < 1e-12 && e2 < 1e-12;
    return fmt("errors %.3g, %.3g", e1, e2);
  });
}

const std::vector<double>& ks(bool quick) {
  static const std::vector<double> full{0.5, 1.0, 2.0};
  static const std::vector<double> small{1.0};
  return quick ? small : full;
}

const std::vector<double>& ratios(bool quick) {
  static const std::vector<double> full{0.0, 0.25, 0.4, 0.6, 1.0};
  static const std::vector<double> small{0.0, 0.25};
  return quick ? small : full;
}

std::vector<IntegralKey> all_keys() {
  std::vector<IntegralKey> out;
  for (Field b1 : {Field::zero, Field::magnetic})
    for (Field b2 : {Field::zero, Field::magnetic})
      for (int l1 : {1, -3})
        for (int l2 : {1, -3}) out.push_back({l1, l2, b1, b2});
  return out;
}

void integral_checks(Battery& b) {
  const bool quick = b.options().quick;

  b.check("angular_overlap_general", [&](bool& ok) {
    Worst w;
    for (double k : ks(quick))
      for (double r : ratios(quick)) {
        const ModelParams p = make_params(k, r);
        for (Field b1 : {Field::zero, Field::magnetic})
          for (Field b2 : {Field::zero, Field::magnetic}) {
            const cplx q = integrals::angular_quadrature(b1, b2, p);
            w.update(relative_difference(
                         integrals::angular_overlap_general(scattering::angular_poly(p, b1),
                                                            scattering::angular_poly(p, b2)),
                         q),
                     p.describe());
            b.ledger().compare("angular_overlap_printed[" + std::string(to_string(b1)) + "," +
                                   std::string(to_string(b2)) + "]",
                               p.describe(),
                               integrals::angular_overlap_printed(scattering::angular_poly(p, b1),
                                                                  scattering::angular_poly(p, b2)),
                               q, 1e-4);
            b.ledger().compare("angular_closed[" + std::string(to_string(b1)) + "," +
                                   std::string(to_string(b2)) + "]",
                               p.describe(), integrals::angular_closed(b1, b2, p), q, 1e-4);
          }
      }
    ok = w.value < 1e-10;
    return fmt("max rel err %.3g", w.value) + (ok ? "" : " at " + w.where);
  });

  integrals::RadialTweak tweak;
  if (b.options().inject_fault) tweak.f3_scale = 1.001;

  b.check("radial_derivative_integral", [&](bool& ok) {
    Worst w;
    for (double k : ks(quick))
      for (double r : ratios(quick)) {
        const ModelParams p = make_params(k, r);
        for (const IntegralKey& key : all_keys()) {
          const cplx q = integrals::radial_derivative_integral(key, p, FormulaMode::quadrature);
          const cplx d = integrals::radial_derivative_integral(key, p, FormulaMode::derived, tweak);
          w.update(relative_difference(d, q), p.describe() + " " + key.label());
        }
      }
    ok = w.value < 1e-6;
    return fmt("derived vs quadrature max rel err %.3g", w.value) + (ok ? "" : " at " + w.where);
  });

  b.check("radial_norm_integral", [&](bool& ok) {
    Worst w;
    for (double k : ks(quick))
      for (double r : ratios(quick)) {
        const ModelParams p = make_params(k, r);
        for (const IntegralKey& key : all_keys()) {
          const cplx q = integrals::radial_norm_integral(key, p, FormulaMode::quadrature);
          w.update(relative_difference(integrals::radial_norm_integral(key, p), q),
                   p.describe() + " " + key.label());
        }
      }
    ok = w.value < 1e-6;
    return fmt("derived vs quadrature max rel err %.3g", w.value) + (ok ? "" : " at " + w.where);
  });

  b.check("radial_integral_continuity", [&](bool& ok) {
    Worst w;
    const ModelParams p0 = make_params(1.0, 0.0);
    const ModelParams p1 = make_params(1.0, 1e-6);
    for (const IntegralKey& key : all_keys()) {
      w.update(relative_difference(integrals::radial_derivative_integral(key, p1),
                                   integrals::radial_derivative_integral(key, p0)),
               key.label());
      w.update(relative_difference(integrals::radial_norm_integral(key, p1),
                                   integrals::radial_norm_integral(key, p0)),
               key.label());
    }
    // Difference of size O(k_B) is expected; the limit must not jump.
    ok = w.value < 1e-5;
    return fmt("k_B = 1e-6 vs 0 max rel diff %.3g", w.value);
  });

  // Printed specializations against the oracle.
  const std::vector<double> spec_ratios = quick ? std::vector<double>{0.0, 0.25}
                                                : std::vector<double>{0.0, 0.25, 0.4, 1.0};
  for (double k : ks(quick))
    for (double r : spec_ratios) {
      const ModelParams p = make_params(k, r);
      for (integrals::PrintedNorm which : integrals::kPrintedNorms) {
        b.ledger().compare(std::string(to_string(which)), p.describe(),
                           integrals::printed_norm_integral(which, p),
                           integrals::radial_norm_integral(integrals::key_of(which), p,
                                                           FormulaMode::quadrature),
                           1e-4);
      }
      for (integrals::PrintedRadial which : integrals::kPrintedRadials) {
        b.ledger().compare(std::string(to_string(which)), p.describe(),
                           integrals::printed_radial_integral(which, p),
                           integrals::radial_combination(which, p, FormulaMode::quadrature), 1e-4);
      }
      for (const IntegralKey& key : all_keys()) {
        b.ledger().compare("IR_printed_series" + key.label(), p.describe(),
                           integrals::radial_derivative_integral(key, p, FormulaMode::paper_literal),
                           integrals::radial_derivative_integral(key, p, FormulaMode::quadrature),
                           1e-4);
        b.ledger().compare("IN_printed_series" + key.label(), p.describe(),
                           integrals::radial_norm_integral(key, p, FormulaMode::paper_literal),
                           integrals::radial_norm_integral(key, p, FormulaMode::quadrature),
                           1e-4);
      }
    }
  {
    // Field and zero-field normalization integrals coincide at k_B = 0.
    const ModelParams p = make_params(1.0, 0.0);
    const cplx printed = integrals::printed_norm_integral(integrals::PrintedNorm::n00_BB, p) /
                         integrals::printed_norm_integral(integrals::PrintedNorm::n00_00, p);
    const cplx oracle_ratio =
        integrals::radial_norm_integral({1, 1, Field::magnetic, Field::magnetic}, p,
                                        FormulaMode::quadrature) /
        integrals::radial_norm_integral({1, 1, Field::zero, Field::zero}, p, FormulaMode::quadrature);
    b.ledger().append({"IN_00_BB_over_IN_00_00", p.describe(), printed, oracle_ratio,
                       relative_difference(printed, oracle_ratio)});
  }
}

void scattering_checks(Battery& b) {
  const bool quick = b.options().quick;

  b.check("norm_exact", [&](bool& ok) {
    Worst w;
    std::vector<ModelParams> points{make_params(1.0, 0.25)};
    if (!quick) points.push_back(make_params(2.0, 1.0, 1.0));
    for (const ModelParams& p : points) {
      const double q = scattering::norm_quadrature(p);
      w.update(std::abs(scattering::norm_exact(p) - q) / q, p.describe());
      b.ledger().compare("norm_appD", p.describe(),
                         scattering::norm_closed_form(p, scattering::NormSource::appD), q, 1e-4);
      b.ledger().compare("norm_sec3", p.describe(),
                         scattering::norm_closed_form(p, scattering::NormSource::sec3), q, 1e-4);
    }
    ok = w.value < 1e-6;
    return fmt("exact vs quadrature max rel err %.3g", w.value);
  });

  b.check("coefficients", [&](bool& ok) {
    Worst w;
    for (Variant v : {Variant::full, Variant::truncated}) {
      const scattering::SpinorCoefficients c =
          scattering::coefficients(make_params(1.0, 0.5 * 0.5, kPi / 4.0, 1.0), 5.0, 0.0, v);
      double s = 0.0;
      for (const cplx& x : c.c) s += std::norm(x);
      if (v == Variant::full) w.update(std::abs(s - 1.0), "full");
    }
    ModelParams free = make_params(1.0, 0.25, 0.7, 0.0);
    const scattering::SpinorCoefficients c = scattering::coefficients(free, 3.0, 0.4, Variant::full);
    w.update(std::abs(c.c[0] * c.c[3] - c.c[1] * c.c[2]), "product");
    ok = w.value < 1e-12;
    return fmt("max deviation %.3g", w.value);
  });

  b.check("r_differences", [&](bool& ok) {
    const ModelParams p = make_params(1.0, 0.25, kPi / 4.0, 1.0);
    const integrals::RDifferences d = integrals::r_differences(p);
    const integrals::RDifferences q = r_differences_quadrature(p);
    const double e13 = relative_difference(d.r13, q.r13);
    const double e24 = relative_difference(d.r24, q.r24);
    const integrals::RDifferences lit = integrals::r_differences(p, FormulaMode::paper_literal);
    b.ledger().compare("R13-R31", p.describe(), lit.r13, q.r13, 1e-3);
    b.ledger().compare("R24-R42", p.describe(), lit.r24, q.r24, 1e-3);
    ok = e13 < 1e-3 && e24 < 1e-3;
    return fmt("rel err R13-R31 %.3g, R24-R42 %.3g", e13, e24);
  });

  if (!quick) {
    b.check("amplitude_direct", [&](bool& ok) {
      // Refinement: tighter tolerances move the value by less than the loose error.
      ModelParams p = make_params(1.0, 0.0);
      oracle::QuadratureSpec loose;
      loose.abs_tol = 1e-7;
      loose.rel_tol = 1e-5;
      oracle::QuadratureSpec tight;
      tight.abs_tol = 1e-9;
      tight.rel_tol = 1e-7;
      const cplx a = scattering::amplitude_direct(p, 0, Field::zero, 10.0, 0.0, loose);
      const cplx t = scattering::amplitude_direct(p, 0, Field::zero, 10.0, 0.0, tight);
      const double drift = relative_difference(a, t);
      for (double rho : {5.0, 10.0, 20.0, 50.0}) {
        b.ledger().compare("amplitude_closed", p.describe() + ",rho=" + fmt("%g", rho),
                           scattering::amplitude_closed(p, 0, Field::zero, rho, 0.0),
                           scattering::amplitude_direct(p, 0, Field::zero, rho, 0.0), 0.05);
      }
      ok = drift < 1e-4;
      return fmt("refinement drift %.3g", drift);
    });
  }
}

void structure_checks(Battery& b) {
  b.check("orthogonal_coefficients", [](bool& ok) {
    Worst w;
    const integrals::OrthogonalWeights ws[] = {
        {1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0},
        {cplx(0.6, 0.0), cplx(0.0, 0.48), cplx(0.64, 0.0)}};
    for (int i = 0; i < 20; ++i) {
      const auto c = qinfo::random_pure_state(5, i);
      for (const auto& wt : ws) {
        const auto perp = integrals::orthogonal_coefficients(c, wt);
        cplx bilinear = 0.0;
        for (int j = 0; j < 4; ++j) bilinear += c.c[j] * perp.c[j];
        w.update(std::abs(bilinear), "");
      }
    }
    ok = w.value < 1e-12;
    return fmt("max bilinear overlap %.3g", w.value);
  });

  b.check("matrix_element_combination", [](bool& ok) {
    // Components as vectors on an m-point grid with R_ik = C_i^H R C_k; the
    // combination must equal <Psi|R|Psi_perp>.
    constexpr int m = 5;
    std::uint64_t counter = 0;
    auto draw = [&counter]() {
      const double re = qinfo::uniform_draw(9, counter++) - 0.5;
      return cplx(re, qinfo::uniform_draw(9, counter++) - 0.5);
    };
    const integrals::OrthogonalWeights weights[] = {
        {1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0},
        {cplx(0.6, 0.0), cplx(0.0, 0.48), cplx(0.64, 0.0)}};
    Worst w;
    for (int trial = 0; trial < 20; ++trial) {
      std::array<Eigen::VectorXcd, 4> comp;
      for (auto& v : comp) {
        v.resize(m);
        for (int j = 0; j < m; ++j) v(j) = draw();
      }
      Eigen::MatrixXcd op(m, m);
      for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) op(r, c) = draw();
      Eigen::Matrix4cd rmat;
      for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) rmat(i, k) = comp[i].dot(op * comp[k]);
      for (const auto& wt : weights) {
        std::array<Eigen::VectorXcd, 4> perp;
        for (auto& v : perp) v.resize(m);
        for (int j = 0; j < m; ++j) {
          scattering::SpinorCoefficients point;
          for (int i = 0; i < 4; ++i) point.c[i] = comp[i](j);
          const auto q = integrals::orthogonal_coefficients(point, wt);
          for (int i = 0; i < 4; ++i) perp[i](j) = q.c[i];
        }
        cplx direct = 0.0;
        for (int i = 0; i < 4; ++i) direct += comp[i].dot(op * perp[i]);
        w.update(relative_difference(integrals::matrix_element_combination(rmat, wt), direct), "");
      }
    }
    ok = w.value < 1e-12;
    return fmt("max rel err vs direct assembly %.3g", w.value);
  });
}

void qinfo_checks(Battery& b) {
  const int n = b.options().quick ? 100 : 1000;

  b.check("density_and_projection", [n](bool& ok) {
    Worst w;
    for (int i = 0; i < n; ++i) {
      const auto c = qinfo::random_pure_state(42, i);
      const qinfo::Matrix4 rho = qinfo::density_from_coefficients(c);
      const qinfo::Matrix2 rb = qinfo::reduce(rho, qinfo::Subsystem::B);
      w.update(std::max(0.0, qinfo::von_neumann_entropy(rho)) * 1e-2, "purity");
      for (qinfo::Basis basis : {qinfo::Basis::Z, qinfo::Basis::X}) {
        const qinfo::Matrix4 proj = qinfo::project_measurement(rho, basis);
        w.update((qinfo::reduce(proj, qinfo::Subsystem::B) - rb).cwiseAbs().maxCoeff(), "trace");
      }
      const auto ev = qinfo::eigenvalues_numeric(qinfo::project_measurement(rho, qinfo::Basis::Z));
      const double mu = std::norm(c.c[0]) + std::norm(c.c[1]);
      w.update(std::abs(ev[0] - std::max(mu, 1.0 - mu)) + std::abs(ev[1] - std::min(mu, 1.0 - mu)),
               "spectrum");
    }
    ok = w.value < 1e-12;
    return fmt("max deviation %.3g", w.value);
  });

  b.check("entropy_summary", [n, &b](bool& ok) {
    double worst = 0.0;
    std::size_t lambda_mismatch = 0;
    for (int i = 0; i < n; ++i) {
      const auto c = qinfo::random_pure_state(43, i);
      const qinfo::EntropySummary s = qinfo::entropy_summary(c);
      worst = std::max(worst, -(s.memory + 1e-9));
      const qinfo::EntropySummary lit = qinfo::entropy_summary(c, qinfo::EigenMode::paper_literal);
      worst = std::max(worst, std::abs(lit.mu - s.mu) + std::abs(lit.xi - s.xi) - 1e-12);
      if (std::abs(lit.lambda - s.lambda) > 1e-6) ++lambda_mismatch;
      if (i < 3) {
        b.ledger().compare("lambda_closed_form", "random_state_" + std::to_string(i), lit.lambda,
                           s.lambda, 1e-6);
      }
    }
    scattering::SpinorCoefficients product;
    product.c = {1.0, 0.0, 0.0, 0.0};
    b.ledger().compare("lambda_closed_form", "product_state",
                       qinfo::eigenvalues_closed_form(product, qinfo::EigenQuantity::lambda).value,
                       qinfo::entropy_summary(product).lambda, 1e-6);
    scattering::SpinorCoefficients bell;
    bell.c = {1.0 / std::sqrt(2.0), 0.0, 0.0, 1.0 / std::sqrt(2.0)};
    const double bell_memory = qinfo::entropy_summary(bell).memory;
    worst = std::max(worst, std::abs(bell_memory) - 1e-9);
    ok = worst <= 0.0;
    return "bound holds on " + std::to_string(n) + " states; closed-form lambda differs on " +
           std::to_string(lambda_mismatch);
  });

  b.check("sample_measurements", [](bool& ok) {
    const auto c = qinfo::random_pure_state(44, 0);
    const auto serial = qinfo::sample_measurements_serial(c, qinfo::Basis::X, 20000, 7);
    const auto parallel = qinfo::sample_measurements(c, qinfo::Basis::X, 20000, 7);
    ok = serial == parallel;
    return ok ? "parallel matches serial" : "parallel counts differ from serial";
  });
}

void sweep_checks(Battery& b) {
  b.check("run_sweep", [](bool& ok) {
    sweep::SweepSpec spec;
    spec.quantity = sweep::Quantity::eigenvalues;
    spec.rho_range = {1.0, 20.0, 8};
    const std::string a = sweep::to_csv(sweep::run_sweep_serial(spec), spec);
    const std::string p = sweep::to_csv(sweep::run_sweep(spec, 2), spec);
    ok = a == p;
    return ok ? "parallel CSV matches serial" : "parallel CSV differs from serial";
  });
}

}  // namespace

bool ValidationReport::ok() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::string ValidationReport::text() const {
  std::string out;
  std::size_t failed = 0;
  for (const auto& c : checks) {
    out += (c.passed ? "PASS " : "FAIL ") + c.name + ": " + c.detail + "\n";
    if (!c.passed) ++failed;
  }
  out += "checks: " + std::to_string(checks.size() - failed) + "/" + std::to_string(checks.size()) +
         " passed\n";
  out += "ledger: " + std::to_string(ledger.size()) + " records\n";
  for (const auto& r : ledger) out += format_record(r) + "\n";
  return out;
}

integrals::RDifferences r_differences_quadrature(const ModelParams& p,
                                                 const oracle::QuadratureSpec& spec) {
  const double norm = scattering::norm_quadrature(p, spec);
  auto raw = [&](double rho, double phi) {
    return scattering::raw_coefficients(p, rho, phi, Variant::truncated).c;
  };
  auto derivative = [&](double rho, double phi) {
    const double h = 1e-5 * rho;
    std::array<cplx, 4> d{};
    if (rho - h < 1.0) {
      const auto f0 = raw(rho, phi);
      const auto f1 = raw(rho + h, phi);
      const auto f2 = raw(rho + 2.0 * h, phi);
      for (int i = 0; i < 4; ++i) d[i] = (-3.0 * f0[i] + 4.0 * f1[i] - f2[i]) / (2.0 * h);
    } else {
      const auto fp = raw(rho + h, phi);
      const auto fm = raw(rho - h, phi);
      for (int i = 0; i < 4; ++i) d[i] = (fp[i] - fm[i]) / (2.0 * h);
    }
    return d;
  };
  oracle::QuadratureSpec inner = spec;
  inner.abs_tol = spec.abs_tol * 1e-3;
  auto antisym = [&](int i, int k) {
    auto radial = [&](double rho) {
      auto angular = [&](double phi) {
        const auto c = raw(rho, phi);
        const auto d = derivative(rho, phi);
        return std::conj(c[i]) * d[k] - std::conj(c[k]) * d[i];
      };
      return rho * oracle::integrate_angular(angular, inner).value;
    };
    return oracle::integrate_radial(radial, 0.0, 1.0, spec).value / norm;
  };
  return {antisym(0, 2), antisym(1, 3)};
}

ValidationReport run_validation(const ValidationOptions& options) {
  Battery b(options);
  specfun_checks(b);
  oracle_checks(b);
  integral_checks(b);
  scattering_checks(b);
  structure_checks(b);
  qinfo_checks(b);
  sweep_checks(b);
  return b.finish();
}

}  // namespace tiqm::validate
