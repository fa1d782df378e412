#include "tiqm/config.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "tiqm/errors.hpp"

namespace tiqm::config {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_real(std::string_view text) {
  const std::string s(trim(text));
  if (s.empty()) throw Error(ErrorCode::config, "empty number");
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v)) {
    throw Error(ErrorCode::config, "invalid number '" + s + "'");
  }
  return v;
}

std::uint64_t parse_unsigned(std::string_view text) {
  const std::string s(trim(text));
  if (s.empty() || s.front() == '-') throw Error(ErrorCode::config, "invalid integer '" + s + "'");
  char* end = nullptr;
  errno = 0;
  const unsigned long long v = std::strtoull(s.c_str(), &end, 10);
  if (end != s.c_str() + s.size() || errno == ERANGE) {
    throw Error(ErrorCode::config, "invalid integer '" + s + "'");
  }
  return v;
}

int parse_steps(std::string_view text) {
  const std::uint64_t v = parse_unsigned(text);
  if (v > 1000000) throw Error(ErrorCode::config, "step count too large");
  return static_cast<int>(v);
}

template <typename F>
std::vector<double> parse_list(std::string_view text, F parse_one) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_one(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

double parse_angle(std::string_view text) {
  std::string s(trim(text));
  const std::size_t pos = s.find("pi");
  if (pos == std::string::npos) return parse_real(s);
  std::string lead = s.substr(0, pos);
  std::string tail = s.substr(pos + 2);
  if (!lead.empty() && lead.back() == '*') lead.pop_back();
  double factor = 1.0;
  if (!lead.empty()) factor = lead == "-" ? -1.0 : parse_real(lead);
  double divisor = 1.0;
  if (!tail.empty()) {
    if (tail.front() != '/') throw Error(ErrorCode::config, "invalid angle '" + s + "'");
    divisor = parse_real(tail.substr(1));
    if (divisor == 0.0) throw Error(ErrorCode::config, "angle divides by zero");
  }
  return factor * kPi / divisor;
}

void apply_setting(sweep::SweepSpec& spec, std::string_view key, std::string_view value) {
  const std::string_view v = trim(value);
  if (key == "quantity") {
    spec.quantity = sweep::parse_quantity(v);
  } else if (key == "k") {
    spec.k = parse_real(v);
  } else if (key == "theta") {
    spec.theta_list = parse_list(v, parse_angle);
  } else if (key == "kb_ratio") {
    spec.kb_ratio_list = parse_list(v, parse_real);
  } else if (key == "kj_ratio") {
    spec.kj_ratio = parse_real(v);
  } else if (key == "rho_min") {
    spec.rho_range.min = parse_real(v);
  } else if (key == "rho_max") {
    spec.rho_range.max = parse_real(v);
  } else if (key == "rho_steps") {
    spec.rho_range.steps = parse_steps(v);
  } else if (key == "k_min") {
    spec.k_range.min = parse_real(v);
  } else if (key == "k_max") {
    spec.k_range.max = parse_real(v);
  } else if (key == "k_steps") {
    spec.k_range.steps = parse_steps(v);
  } else if (key == "phi") {
    spec.phi = parse_angle(v);
  } else if (key == "variant") {
    spec.variant = sweep::parse_variant(v);
  } else if (key == "eigen_mode") {
    spec.eigen_mode = sweep::parse_eigen_mode(v);
  } else if (key == "seed") {
    spec.seed = parse_unsigned(v);
  } else {
    throw Error(ErrorCode::config, "unknown key '" + std::string(key) + "'");
  }
}

void apply_config_text(sweep::SweepSpec& spec, std::string_view text, const std::string& source) {
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::size_t hash = line.find('#');
    const std::string_view body = trim(std::string_view(line).substr(0, hash));
    if (body.empty()) continue;
    const std::string where = source + ":" + std::to_string(number) + ": ";
    const std::size_t eq = body.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::config, where + "expected 'key = value'");
    }
    const std::string_view key = trim(body.substr(0, eq));
    try {
      apply_setting(spec, key, body.substr(eq + 1));
    } catch (const Error& e) {
      throw Error(ErrorCode::config, where + "field '" + std::string(key) + "': " + e.what());
    }
  }
}

void apply_config_file(sweep::SweepSpec& spec, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::config, "cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  apply_config_text(spec, buf.str(), path);
}

}  // namespace tiqm::config
