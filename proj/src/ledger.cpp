#include "tiqm/ledger.hpp"

#include <cmath>
#include <cstdio>

namespace tiqm {

namespace {

std::string format_complex(cplx v) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", v.real(), v.imag());
  return buf;
}

}  // namespace

std::string format_record(const LedgerRecord& r) {
  char rel[48];
  std::snprintf(rel, sizeof rel, "%.17g", r.rel_diff);
  return r.quantity + " " + r.params + " " + format_complex(r.paper) + " " +
         format_complex(r.oracle) + " " + rel;
}

double relative_difference(cplx paper, cplx oracle) {
  const double diff = std::abs(paper - oracle);
  const double scale = std::abs(oracle);
  return scale > 0.0 ? diff / scale : diff;
}

bool DiscrepancyLedger::compare(const std::string& quantity, const std::string& params,
                                cplx paper, cplx oracle, double tol) {
  const double rel = relative_difference(paper, oracle);
  if (!(rel > tol) && std::isfinite(rel)) return false;
  append({quantity, params, paper, oracle, rel});
  return true;
}

void DiscrepancyLedger::append(LedgerRecord r) {
  std::lock_guard<std::mutex> lock(mutex_);
  records_.push_back(std::move(r));
}

std::vector<LedgerRecord> DiscrepancyLedger::records() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return records_;
}

std::size_t DiscrepancyLedger::size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return records_.size();
}

bool DiscrepancyLedger::contains(const std::string& quantity_prefix) const {
  std::lock_guard<std::mutex> lock(mutex_);
  for (const auto& r : records_) {
    if (r.quantity.compare(0, quantity_prefix.size(), quantity_prefix) == 0) return true;
  }
  return false;
}

std::string DiscrepancyLedger::report() const {
  std::lock_guard<std::mutex> lock(mutex_);
  std::string out;
  for (const auto& r : records_) out += format_record(r) + "\n";
  return out;
}

}  // namespace tiqm
