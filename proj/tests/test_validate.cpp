#include <doctest.h>

#include <algorithm>

#include "tiqm/validate.hpp"

using namespace tiqm;
using namespace tiqm::validate;

namespace {

const CheckResult* find(const ValidationReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

bool ledger_has(const ValidationReport& r, const std::string& prefix) {
  return std::any_of(r.ledger.begin(), r.ledger.end(),
                     [&](const LedgerRecord& x) { return x.quantity.rfind(prefix, 0) == 0; });
}

}  // namespace

TEST_CASE("the quick battery passes and records known discrepancies") {
  const ValidationReport r = run_validation({true, false});
  for (const auto& c : r.checks) {
    CAPTURE(c.name);
    CAPTURE(c.detail);
    CHECK(c.passed);
  }
  CHECK(r.ok());
  CHECK(ledger_has(r, "IN_00_BB_over_IN_00_00"));
  CHECK(ledger_has(r, "lambda_closed_form"));
  CHECK(ledger_has(r, "bessel_k_asymptotic"));
  CHECK(r.text().find("checks: ") != std::string::npos);
}

TEST_CASE("an injected coefficient fault is caught and named") {
  const ValidationReport r = run_validation({true, true});
  CHECK_FALSE(r.ok());
  const CheckResult* c = find(r, "radial_derivative_integral");
  REQUIRE(c != nullptr);
  CHECK_FALSE(c->passed);
  CHECK(r.text().find("FAIL radial_derivative_integral") != std::string::npos);
}

TEST_CASE("r_differences_quadrature agrees with the derived closed forms") {
  ModelParams p;
  p.k = 1.5;
  p.kB = 0.2;
  p.theta = 0.9;
  p.kJ = 0.7;
  const auto q = r_differences_quadrature(p);
  const auto d = integrals::r_differences(p);
  CHECK(relative_difference(d.r13, q.r13) < 1e-5);
  CHECK(relative_difference(d.r24, q.r24) < 1e-5);
}
