#include "tiqm/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <functional>

#include "tiqm/errors.hpp"
#include "tiqm/integrals.hpp"

namespace tiqm::sweep {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string join(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ";" : "") + num(v[i]);
  return out;
}

bool is_flag_only(const std::string& err) {
  return err.empty() || err == "divergence_band" || err == "divergence_band_substituted";
}

struct GridPoint {
  double theta = 0.0;
  double ratio = 0.0;
  double x = 0.0;  // rho or k
  std::size_t index = 0;
};

GridPoint point_at(const SweepSpec& spec, std::size_t index) {
  const bool radial = spec.quantity == Quantity::memory || spec.quantity == Quantity::eigenvalues;
  const std::vector<double> xs = radial ? spec.rho_range.values() : spec.k_range.values();
  const std::size_t nx = xs.size();
  const std::size_t nr = spec.kb_ratio_list.size();
  GridPoint g;
  g.index = index;
  g.x = xs[index % nx];
  g.ratio = spec.kb_ratio_list[(index / nx) % nr];
  if (spec.quantity != Quantity::angular_diff) g.theta = spec.theta_list[index / (nx * nr)];
  return g;
}

ModelParams params_for(const SweepSpec& spec, double k, double ratio, double theta) {
  ModelParams p;
  p.k = k;
  p.kB = ratio * k;
  p.kJ = spec.kj_ratio * k;
  p.theta = theta;
  return p;
}

using Row = std::vector<std::string>;

Row blank_row(std::size_t n) { return Row(n, ""); }

Row uncertainty_row(const SweepSpec& spec, const GridPoint& g) {
  const ModelParams p = params_for(spec, g.x, g.ratio, g.theta);
  Row r = blank_row(columns(Quantity::uncertainty).size());
  r[0] = num(p.k);
  r[1] = num(g.ratio);
  r[2] = num(p.kB);
  r[3] = num(p.theta);
  r[4] = num(p.kJ);
  try {
    const integrals::UncertaintyBound b = integrals::uncertainty_bound(p);
    const integrals::UncertaintyBound bp =
        integrals::uncertainty_bound(p, integrals::FormulaMode::paper_literal);
    r[5] = num(b.bound);
    r[6] = num(bp.bound);
    r[7] = num(b.contribution_13.real());
    r[8] = num(b.contribution_13.imag());
    r[9] = num(b.contribution_24.real());
    r[10] = num(b.contribution_24.imag());
  } catch (const Error& e) {
    r[11] = std::string(to_string(e.code()));
  }
  return r;
}

Row norm_row(const SweepSpec& spec, const GridPoint& g) {
  const ModelParams p = params_for(spec, g.x, g.ratio, g.theta);
  Row r = blank_row(columns(Quantity::norm).size());
  r[0] = num(p.k);
  r[1] = num(g.ratio);
  r[2] = num(p.kB);
  r[3] = num(p.theta);
  r[4] = num(p.kJ);
  try {
    r[5] = num(scattering::norm_exact(p));
    r[6] = num(scattering::norm_closed_form(p, scattering::NormSource::appD));
    r[7] = num(scattering::norm_closed_form(p, scattering::NormSource::sec3));
  } catch (const Error& e) {
    r[8] = std::string(to_string(e.code()));
  }
  return r;
}

Row angular_row(const SweepSpec& spec, const GridPoint& g) {
  const ModelParams p = params_for(spec, g.x, g.ratio, 0.0);
  Row r = blank_row(columns(Quantity::angular_diff).size());
  r[0] = num(p.k);
  r[1] = num(g.ratio);
  r[2] = num(p.kB);
  const cplx printed = integrals::angular_closed(Field::magnetic, Field::magnetic, p) -
                       integrals::angular_closed(Field::zero, Field::zero, p);
  const cplx general =
      integrals::angular_overlap_general(scattering::angular_poly(p, Field::magnetic),
                                         scattering::angular_poly(p, Field::magnetic)) -
      integrals::angular_overlap_general(scattering::angular_poly(p, Field::zero),
                                         scattering::angular_poly(p, Field::zero));
  r[3] = num(printed.real());
  r[4] = num(printed.imag());
  r[5] = num(general.real());
  r[6] = num(general.imag());
  if (p.near_divergence()) r[7] = "divergence_band";
  return r;
}

Row state_row(const SweepSpec& spec, const GridPoint& g) {
  const bool memory = spec.quantity == Quantity::memory;
  Row r = blank_row(columns(spec.quantity).size());
  ModelParams p = params_for(spec, spec.k, g.ratio, g.theta);
  std::string flag;
  if (p.near_divergence()) {
    p = params_for(spec, spec.k, substitute_ratio(g.ratio), g.theta);
    flag = "divergence_band_substituted";
  }
  r[0] = num(g.x);
  r[1] = num(g.ratio);
  r[2] = num(p.kB);
  r[3] = num(p.theta);
  r[4] = num(p.k);
  r[5] = num(p.kJ);
  const std::size_t err_col = r.size() - 1;
  try {
    const scattering::SpinorCoefficients c =
        scattering::coefficients(p, g.x, spec.phi, spec.variant);
    const qinfo::EntropySummary s = qinfo::entropy_summary(c, spec.eigen_mode);
    if (memory) {
      const double lhs = s.S_X_cond_B + s.S_Z_cond_B;
      const double rhs = s.complementarity_term + s.S_cond_AB;
      r[6] = num(s.memory);
      r[7] = num(s.S_Z_cond_B);
      r[8] = num(s.S_X_cond_B);
      r[9] = num(s.S_cond_AB);
      r[10] = num(lhs);
      r[11] = num(rhs);
    } else {
      const std::uint64_t stream = spec.seed ^ (0x9e3779b97f4a7c15ULL * (g.index + 1));
      const qinfo::Counts counts =
          qinfo::sample_measurements_serial(c, qinfo::Basis::Z, kSamplesPerRow, stream);
      r[6] = num(s.mu);
      r[7] = num(s.lambda);
      r[8] = num(s.xi);
      r[9] = num(s.zeta);
      r[10] = num(static_cast<double>(counts[0] + counts[1]) / kSamplesPerRow);
    }
    if (s.flagged && flag.empty()) flag = "closed_form_clamped";
    r[err_col] = flag;
  } catch (const Error& e) {
    r[err_col] = std::string(to_string(e.code()));
  }
  return r;
}

Row compute_row(const SweepSpec& spec, std::size_t index) {
  const GridPoint g = point_at(spec, index);
  switch (spec.quantity) {
    case Quantity::uncertainty: return uncertainty_row(spec, g);
    case Quantity::norm: return norm_row(spec, g);
    case Quantity::angular_diff: return angular_row(spec, g);
    case Quantity::memory:
    case Quantity::eigenvalues: return state_row(spec, g);
  }
  return {};
}

SweepResult finish(std::vector<Row> rows, Quantity q) {
  SweepResult out;
  out.header = columns(q);
  for (const Row& r : rows) {
    const std::string& err = r.back();
    if (!err.empty()) ++out.flagged_rows;
    if (!is_flag_only(err) && err != "closed_form_clamped") ++out.error_rows;
  }
  out.rows = std::move(rows);
  return out;
}

}  // namespace

std::string_view to_string(Quantity q) {
  switch (q) {
    case Quantity::uncertainty: return "uncertainty";
    case Quantity::memory: return "memory";
    case Quantity::eigenvalues: return "eigenvalues";
    case Quantity::angular_diff: return "angular_diff";
    case Quantity::norm: return "norm";
  }
  return "?";
}

Quantity parse_quantity(std::string_view s) {
  for (Quantity q : {Quantity::uncertainty, Quantity::memory, Quantity::eigenvalues,
                     Quantity::angular_diff, Quantity::norm}) {
    if (s == to_string(q)) return q;
  }
  throw Error(ErrorCode::config, "unknown quantity '" + std::string(s) + "'");
}

scattering::Variant parse_variant(std::string_view s) {
  if (s == "full") return scattering::Variant::full;
  if (s == "truncated") return scattering::Variant::truncated;
  throw Error(ErrorCode::config, "unknown variant '" + std::string(s) + "'");
}

qinfo::EigenMode parse_eigen_mode(std::string_view s) {
  if (s == "eigensolve") return qinfo::EigenMode::eigensolve;
  if (s == "paper_literal") return qinfo::EigenMode::paper_literal;
  throw Error(ErrorCode::config, "unknown eigen mode '" + std::string(s) + "'");
}

std::vector<double> Range::values() const {
  std::vector<double> out(steps);
  for (int i = 0; i < steps; ++i) {
    out[i] = i + 1 == steps ? max : min + (max - min) * i / (steps - 1);
  }
  return out;
}

SweepSpec::SweepSpec()
    : theta_list{kPi / 8.0, kPi / 4.0, 3.0 * kPi / 8.0}, kb_ratio_list{0.25, 0.5, 1.0, 1.5} {}

void SweepSpec::validate() const {
  auto bad = [](const std::string& what) { throw Error(ErrorCode::config, what); };
  auto finite = [](double v) { return std::isfinite(v); };
  if (!finite(k) || k <= 0.0) bad("k must be positive");
  if (!finite(kj_ratio) || kj_ratio < 0.0) bad("kj_ratio must be non-negative");
  if (!finite(phi)) bad("phi must be finite");
  if (theta_list.empty()) bad("theta list is empty");
  if (kb_ratio_list.empty()) bad("kb_ratio list is empty");
  for (double t : theta_list)
    if (!finite(t)) bad("theta values must be finite");
  for (double r : kb_ratio_list)
    if (!finite(r) || r < 0.0) bad("kb_ratio values must be non-negative");
  for (const Range* r : {&rho_range, &k_range}) {
    if (r->steps < 2) bad("range steps must be at least 2");
    if (!finite(r->min) || !finite(r->max) || r->max < r->min) bad("range bounds are invalid");
  }
  if (rho_range.min < 1.0) bad("rho_min must be at least 1");
  if (k_range.min <= 0.0) bad("k_min must be positive");
  if (variant == scattering::Variant::truncated && kj_ratio == 0.0) {
    bad("the truncated variant needs kj_ratio > 0");
  }
}

std::string SweepSpec::describe() const {
  return "quantity=" + std::string(to_string(quantity)) + " k=" + num(k) + " theta=" +
         join(theta_list) + " kb_ratio=" + join(kb_ratio_list) + " kj_ratio=" + num(kj_ratio) +
         " rho=" + num(rho_range.min) + ":" + num(rho_range.max) + ":" +
         std::to_string(rho_range.steps) + " k_range=" + num(k_range.min) + ":" +
         num(k_range.max) + ":" + std::to_string(k_range.steps) + " phi=" + num(phi) +
         " variant=" + std::string(scattering::to_string(variant)) +
         " eigen_mode=" + std::string(qinfo::to_string(eigen_mode)) +
         " seed=" + std::to_string(seed);
}

std::vector<std::string> columns(Quantity q) {
  switch (q) {
    case Quantity::uncertainty:
      return {"k", "kb_ratio", "kB", "theta", "kJ", "bound", "bound_paper",
              "r13_re", "r13_im", "r24_re", "r24_im", "error"};
    case Quantity::memory:
      return {"rho", "kb_ratio", "kB", "theta", "k", "kJ", "memory",
              "S_Z_cond_B", "S_X_cond_B", "S_cond_AB", "lhs", "rhs", "error"};
    case Quantity::eigenvalues:
      return {"rho", "kb_ratio", "kB", "theta", "k", "kJ",
              "mu", "lambda", "xi", "zeta", "mu_sampled", "error"};
    case Quantity::angular_diff:
      return {"k", "kb_ratio", "kB", "diff_re", "diff_im",
              "diff_overlap_re", "diff_overlap_im", "error"};
    case Quantity::norm:
      return {"k", "kb_ratio", "kB", "theta", "kJ", "norm_exact", "norm_appD", "norm_sec3", "error"};
  }
  return {};
}

std::size_t grid_size(const SweepSpec& spec) {
  const bool radial = spec.quantity == Quantity::memory || spec.quantity == Quantity::eigenvalues;
  const std::size_t nx = static_cast<std::size_t>(radial ? spec.rho_range.steps : spec.k_range.steps);
  const std::size_t nt = spec.quantity == Quantity::angular_diff ? 1 : spec.theta_list.size();
  return nt * spec.kb_ratio_list.size() * nx;
}

SweepResult run_sweep_serial(const SweepSpec& spec) {
  spec.validate();
  const std::size_t n = grid_size(spec);
  std::vector<Row> rows(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = compute_row(spec, i);
  return finish(std::move(rows), spec.quantity);
}

SweepResult run_sweep(const SweepSpec& spec, int threads) {
  spec.validate();
  const auto n = static_cast<std::int64_t>(grid_size(spec));
  std::vector<Row> rows(static_cast<std::size_t>(n));
  if (threads <= 0) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) rows[i] = compute_row(spec, static_cast<std::size_t>(i));
  } else {
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::int64_t i = 0; i < n; ++i) rows[i] = compute_row(spec, static_cast<std::size_t>(i));
  }
  return finish(std::move(rows), spec.quantity);
}

std::string to_csv(const SweepResult& result, const SweepSpec& spec) {
  std::string out;
  out += "# tiqm sweep\n";
  out += "# version=" + std::string(kVersion) + "\n";
  out += "# spec: " + spec.describe() + "\n";
  out += "# eigen_mode=" + std::string(qinfo::to_string(spec.eigen_mode)) + "\n";
  out += "# note: default theta values are an arbitrary choice\n";
  for (std::size_t i = 0; i < result.header.size(); ++i) {
    out += (i ? "," : "") + result.header[i];
  }
  out += "\n";
  for (const auto& row : result.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + row[i];
    out += "\n";
  }
  return out;
}

double substitute_ratio(double ratio) { return ratio <= 0.5 ? 0.49 : 0.51; }

}  // namespace tiqm::sweep
