#pragma once

#include <mutex>
#include <string>
#include <vector>

#include "tiqm/params.hpp"

// Append-only record of every place a printed formula and the oracle differ.
namespace tiqm {

struct LedgerRecord {
  std::string quantity;
  std::string params;
  cplx paper;
  cplx oracle;
  double rel_diff = 0.0;
};

// Formats one record as `<quantity> <params> <paper> <oracle> <rel_diff>`;
// complex values print as `re+imi` with 17 significant digits.
std::string format_record(const LedgerRecord& r);

// |paper - oracle| / |oracle|, or the absolute difference when oracle = 0.
double relative_difference(cplx paper, cplx oracle);

class DiscrepancyLedger {
 public:
  // Appends when rel_diff exceeds tol; returns true if a record was added.
  bool compare(const std::string& quantity, const std::string& params, cplx paper,
               cplx oracle, double tol);
  void append(LedgerRecord r);

  std::vector<LedgerRecord> records() const;
  std::size_t size() const;
  bool contains(const std::string& quantity_prefix) const;
  std::string report() const;

 private:
  mutable std::mutex mutex_;
  std::vector<LedgerRecord> records_;
};

}  // namespace tiqm
