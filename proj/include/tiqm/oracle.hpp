#pragma once

#include <functional>

#include "tiqm/params.hpp"

// Independent numerical-integration engine. Every closed form in the
// library is checked against these routines; nothing here knows about the
// closed forms.
namespace tiqm::oracle {

struct QuadratureSpec {
  double abs_tol = 1e-9;
  double rel_tol = 1e-7;
  int max_subdivisions = 10000;
  double radial_cutoff = 200.0;

  // Throws Error(domain) for non-positive tolerances or cutoff <= 1.
  void validate() const;
};

struct QuadratureResult {
  cplx value;
  double error = 0.0;       // combined estimate, tail included
  cplx tail = 0.0;          // contribution beyond the cutoff (radial only)
  double tail_bound = 0.0;  // |tail| plus its own error estimate
  int subdivisions = 0;
  bool tail_dominated = false;
};

using Integrand = std::function<cplx(double)>;
using Integrand2 = std::function<cplx(double, double)>;

// Adaptive Gauss-Kronrod (7/15) on [a, b]. Panels are first split so none is
// longer than max_panel. Panel sums are combined in left-to-right pairwise
// order so the result does not depend on refinement history.
// Throws Error(non_convergence) when max_subdivisions is exhausted.
QuadratureResult integrate_interval(const Integrand& f, double a, double b,
                                    const QuadratureSpec& spec,
                                    double max_panel = 0.0);

// ∫_0^{2π} f(φ) dφ.
QuadratureResult integrate_angular(const Integrand& f, const QuadratureSpec& spec = {});

// ∫_lower^∞ f(ρ) dρ for integrands of the form g(ρ) e^{iωρ} with g smooth
// and decaying at least like ρ^-2. `omega` is the oscillation wavenumber
// (0 for non-oscillatory integrands). The interval [lower, cutoff] uses
// panels no longer than half a period; the tail is added explicitly.
QuadratureResult integrate_radial(const Integrand& f, double omega,
                                  double lower = 1.0,
                                  const QuadratureSpec& spec = {});

// ∫_0^∞ ρ' dρ' ∫_0^{2π} dφ' w(ρ') f(ρ', φ') with the normalized dot density
// w(ρ') = exp(-ρ'²/l_B²) / (π l_B²). Composite Gauss-Legendre in ρ' on
// [0, 8 l_B], refined until two successive rules agree; adaptive in φ'.
QuadratureResult integrate_2d(const Integrand2& f, double lB,
                              const QuadratureSpec& spec = {});

}  // namespace tiqm::oracle
