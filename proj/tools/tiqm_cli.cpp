#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "tiqm/config.hpp"
#include "tiqm/errors.hpp"
#include "tiqm/integrals.hpp"
#include "tiqm/qinfo.hpp"
#include "tiqm/sweep.hpp"
#include "tiqm/validate.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

// Flag values kept as text and applied through the config parser, so flags
// and config files share one set of rules and flags always win.
struct SweepFlags {
  std::string config_path;
  std::string output_path;
  std::vector<std::string> theta;
  std::vector<std::string> kb_ratio;
  std::map<std::string, std::string> scalars;
  int threads = 0;
};

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : ",") + p;
  return out;
}

void add_scalar(CLI::App* app, SweepFlags& f, const std::string& flag, const std::string& key,
                const std::string& help) {
  app->add_option_function<std::string>(
      flag, [&f, key](const std::string& v) { f.scalars[key] = v; }, help);
}

tiqm::sweep::SweepSpec build_spec(const SweepFlags& f) {
  tiqm::sweep::SweepSpec spec;
  if (!f.config_path.empty()) tiqm::config::apply_config_file(spec, f.config_path);
  for (const auto& [key, value] : f.scalars) tiqm::config::apply_setting(spec, key, value);
  if (!f.theta.empty()) tiqm::config::apply_setting(spec, "theta", join(f.theta));
  if (!f.kb_ratio.empty()) tiqm::config::apply_setting(spec, "kb_ratio", join(f.kb_ratio));
  spec.validate();
  return spec;
}

int write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return std::cout ? kExitOk : kExitIo;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open " << path << " for writing\n";
    return kExitIo;
  }
  out << text;
  out.close();
  if (!out) {
    std::cerr << "error: failed writing " << path << "\n";
    return kExitIo;
  }
  return kExitOk;
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Point parameters for the coeffs and integrals subcommands.
struct PointFlags {
  double k = 1.0;
  std::string theta = "pi/4";
  double kb_ratio = 0.25;
  double kj_ratio = 1.0;
  double rho = 5.0;
  std::string phi = "0";
  std::string variant = "full";
  std::string mode = "derived";
};

tiqm::ModelParams point_params(const PointFlags& f) {
  tiqm::ModelParams p;
  p.k = f.k;
  p.theta = tiqm::config::parse_angle(f.theta);
  p.kB = f.kb_ratio * f.k;
  p.kJ = f.kj_ratio * f.k;
  p.validate();
  return p;
}

void add_point_options(CLI::App* app, PointFlags& f) {
  app->add_option("--k", f.k, "Incident momentum k");
  app->add_option("--theta", f.theta, "Spin angle theta (accepts pi/4 style)");
  app->add_option("--kb-ratio", f.kb_ratio, "Zeeman ratio k_B/k");
  app->add_option("--kj-ratio", f.kj_ratio, "Exchange ratio k_J/k");
}

int run_coeffs(const PointFlags& f, const std::string& output) {
  const tiqm::ModelParams p = point_params(f);
  const auto variant = tiqm::sweep::parse_variant(f.variant);
  const auto c =
      tiqm::scattering::coefficients(p, f.rho, tiqm::config::parse_angle(f.phi), variant);
  std::string text = "# " + p.describe() + ",rho=" + fmt17(f.rho) + ",variant=" + f.variant + "\n";
  text += "name,re,im\n";
  for (int i = 0; i < 4; ++i) {
    text += "C" + std::to_string(i + 1) + "," + fmt17(c.c[i].real()) + "," + fmt17(c.c[i].imag()) +
            "\n";
  }
  text += "norm_sq," + fmt17(c.norm_sq) + ",0\n";
  return write_output(output, text);
}

tiqm::integrals::FormulaMode parse_mode(const std::string& s) {
  using tiqm::integrals::FormulaMode;
  if (s == "derived") return FormulaMode::derived;
  if (s == "paper_literal") return FormulaMode::paper_literal;
  if (s == "quadrature") return FormulaMode::quadrature;
  throw tiqm::Error(tiqm::ErrorCode::config,
                    "field 'mode': expected derived, paper_literal or quadrature, got '" + s + "'");
}

int run_integrals(const PointFlags& f, const std::string& output) {
  const tiqm::ModelParams p = point_params(f);
  const auto table = tiqm::integrals::integral_table(p, parse_mode(f.mode));
  std::string text = "# " + p.describe() + ",mode=" + f.mode + "\n";
  text += "name,re,im\n";
  for (const auto& e : table) {
    text += e.name + "," + fmt17(e.value.real()) + "," + fmt17(e.value.imag()) + "\n";
  }
  return write_output(output, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spin-state scattering sweeps, integral tables and oracle validation"};
  app.require_subcommand(1);

  SweepFlags sf;
  CLI::App* sweep = app.add_subcommand("sweep", "Run a parameter sweep and emit CSV");
  sweep->add_option("--config", sf.config_path, "key = value configuration file");
  sweep->add_option("--output", sf.output_path, "CSV destination (default stdout)");
  sweep->add_option("--theta", sf.theta, "Spin angle; repeatable, accepts pi/4 style");
  sweep->add_option("--kb-ratio", sf.kb_ratio, "Zeeman ratio k_B/k; repeatable");
  sweep->add_option("--threads", sf.threads, "Worker threads (0 = OpenMP default)");
  add_scalar(sweep, sf, "--quantity", "quantity",
             "uncertainty, memory, eigenvalues, angular_diff or norm");
  add_scalar(sweep, sf, "--k", "k", "Incident momentum for rho sweeps");
  add_scalar(sweep, sf, "--kj-ratio", "kj_ratio", "Exchange ratio k_J/k");
  add_scalar(sweep, sf, "--rho-min", "rho_min", "Smallest rho (>= 1)");
  add_scalar(sweep, sf, "--rho-max", "rho_max", "Largest rho");
  add_scalar(sweep, sf, "--rho-steps", "rho_steps", "Number of rho points (>= 2)");
  add_scalar(sweep, sf, "--k-min", "k_min", "Smallest k for k sweeps");
  add_scalar(sweep, sf, "--k-max", "k_max", "Largest k for k sweeps");
  add_scalar(sweep, sf, "--k-steps", "k_steps", "Number of k points (>= 2)");
  add_scalar(sweep, sf, "--phi", "phi", "Polar angle of the evaluation point");
  add_scalar(sweep, sf, "--variant", "variant", "full or truncated");
  add_scalar(sweep, sf, "--eigen-mode", "eigen_mode", "paper_literal or eigensolve");
  add_scalar(sweep, sf, "--seed", "seed", "Sampler seed");

  bool quick = false;
  bool inject_fault = false;
  std::string validate_output;
  CLI::App* validate = app.add_subcommand("validate", "Run the oracle battery");
  validate->add_flag("--quick", quick, "Subsampled battery");
  validate->add_flag("--inject-fault", inject_fault, "Perturb a radial coefficient");
  validate->add_option("--output", validate_output, "Report destination (default stdout)");

  PointFlags cf;
  std::string coeffs_output;
  CLI::App* coeffs = app.add_subcommand("coeffs", "Dump C1..C4 at one point");
  add_point_options(coeffs, cf);
  coeffs->add_option("--rho", cf.rho, "Radial coordinate (>= 1)");
  coeffs->add_option("--phi", cf.phi, "Polar angle");
  coeffs->add_option("--variant", cf.variant, "full or truncated");
  coeffs->add_option("--output", coeffs_output, "Destination (default stdout)");

  PointFlags inf;
  std::string integrals_output;
  CLI::App* ints = app.add_subcommand("integrals", "Dump the angular and radial integral table");
  add_point_options(ints, inf);
  ints->add_option("--mode", inf.mode, "derived, paper_literal or quadrature");
  ints->add_option("--output", integrals_output, "Destination (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*sweep) {
      const tiqm::sweep::SweepSpec spec = build_spec(sf);
      const auto result = tiqm::sweep::run_sweep(spec, sf.threads);
      return write_output(sf.output_path, tiqm::sweep::to_csv(result, spec));
    }
    if (*validate) {
      const auto report = tiqm::validate::run_validation({quick, inject_fault});
      const int rc = write_output(validate_output, report.text());
      if (rc != kExitOk) return rc;
      return report.ok() ? kExitOk : kExitValidation;
    }
    if (*coeffs) return run_coeffs(cf, coeffs_output);
    if (*ints) return run_integrals(inf, integrals_output);
  } catch (const tiqm::Error& e) {
    std::cerr << "error [" << tiqm::to_string(e.code()) << "]: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
