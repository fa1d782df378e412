#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tiqm/qinfo.hpp"
#include "tiqm/scattering.hpp"

// Parameter sweeps over the figure pipelines, emitted as CSV.
namespace tiqm::sweep {

inline constexpr const char* kVersion = "1.0.0";

enum class Quantity { uncertainty, memory, eigenvalues, angular_diff, norm };

std::string_view to_string(Quantity q);
// Throws Error(config) for unknown names.
Quantity parse_quantity(std::string_view s);
scattering::Variant parse_variant(std::string_view s);
qinfo::EigenMode parse_eigen_mode(std::string_view s);

struct Range {
  double min = 0.0;
  double max = 1.0;
  int steps = 2;

  // Evenly spaced, both ends included.
  std::vector<double> values() const;
};

// Samples per eigenvalues row for the mu_sampled column.
inline constexpr std::uint64_t kSamplesPerRow = 4096;

struct SweepSpec {
  Quantity quantity = Quantity::uncertainty;
  double k = 1.0;
  std::vector<double> theta_list;     // defaults to {π/8, π/4, 3π/8}
  std::vector<double> kb_ratio_list;  // defaults to {0.25, 0.5, 1, 1.5}
  double kj_ratio = 1.0;
  Range rho_range{1.0, 20.0, 200};
  Range k_range{0.5, 2.0, 31};
  double phi = 0.0;
  scattering::Variant variant = scattering::Variant::full;
  qinfo::EigenMode eigen_mode = qinfo::EigenMode::eigensolve;
  std::uint64_t seed = 1;

  SweepSpec();

  // Throws Error(config) for empty lists, steps < 2, rho_min < 1, k <= 0 or
  // non-finite values.
  void validate() const;
  // One-line `key=value` rendering for CSV metadata.
  std::string describe() const;
};

struct SweepResult {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::size_t error_rows = 0;   // rows whose error column names a hard failure
  std::size_t flagged_rows = 0; // rows with any entry in the error column
};

std::vector<std::string> columns(Quantity q);

// Number of grid points; rows are lexicographic over (theta, kb_ratio, x)
// where x is rho or k; angular_diff has no theta axis.
std::size_t grid_size(const SweepSpec& spec);

SweepResult run_sweep_serial(const SweepSpec& spec);
// threads <= 0 uses the OpenMP default.
SweepResult run_sweep(const SweepSpec& spec, int threads = 0);

// `#` preamble, header and rows; numbers at 17 significant digits.
std::string to_csv(const SweepResult& result, const SweepSpec& spec);

// Ratio used in place of one inside the divergence band: 0.49 at or below
// one half, 0.51 above.
double substitute_ratio(double ratio);

}  // namespace tiqm::sweep
