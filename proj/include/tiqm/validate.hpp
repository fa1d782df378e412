#pragma once

#include <string>
#include <vector>

#include "tiqm/integrals.hpp"
#include "tiqm/ledger.hpp"

// Oracle battery: hard invariants that must pass plus ledger comparisons of
// printed formulas against the oracle.
namespace tiqm::validate {

struct CheckResult {
  std::string name;  // the operation under test
  bool passed = false;
  std::string detail;
};

struct ValidationOptions {
  bool quick = false;         // subsampled battery
  bool inject_fault = false;  // perturbs the third radial coefficient
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  std::vector<LedgerRecord> ledger;

  bool ok() const;
  std::string text() const;
};

ValidationReport run_validation(const ValidationOptions& options = {});

// R13 - R31 and R24 - R42 of the truncated state by nested quadrature of
// ρ [C_i* ∂_ρ C_k - C_k* ∂_ρ C_i] with finite-difference derivatives,
// normalized by norm_quadrature.
integrals::RDifferences r_differences_quadrature(const ModelParams& p,
                                                 const oracle::QuadratureSpec& spec = {});

}  // namespace tiqm::validate
