#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "tiqm/config.hpp"
#include "tiqm/errors.hpp"
#include "tiqm/sweep.hpp"

using namespace tiqm;
using namespace tiqm::sweep;

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

std::string config_error(const std::string& text) {
  SweepSpec s;
  try {
    config::apply_config_text(s, text, "test.cfg");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::config);
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("SweepSpec defaults") {
  const SweepSpec s;
  CHECK(s.k == 1.0);
  CHECK(s.kj_ratio == 1.0);
  CHECK(s.theta_list.size() == 3);
  CHECK(s.theta_list[1] == doctest::Approx(kPi / 4.0));
  CHECK(s.kb_ratio_list == std::vector<double>{0.25, 0.5, 1.0, 1.5});
  CHECK(s.rho_range.min == 1.0);
  CHECK(s.rho_range.max == 20.0);
  CHECK(s.rho_range.steps == 200);
  CHECK_NOTHROW(s.validate());
}

TEST_CASE("SweepSpec validation") {
  SweepSpec s;
  s.rho_range.steps = 1;
  CHECK_THROWS_AS(s.validate(), Error);
  s = SweepSpec{};
  s.rho_range.min = 0.5;
  CHECK_THROWS_AS(s.validate(), Error);
  s = SweepSpec{};
  s.theta_list.clear();
  CHECK_THROWS_AS(s.validate(), Error);
}

TEST_CASE("Range values include both ends") {
  const Range r{1.0, 2.0, 5};
  const auto v = r.values();
  REQUIRE(v.size() == 5);
  CHECK(v.front() == 1.0);
  CHECK(v[2] == 1.5);
  CHECK(v.back() == 2.0);
}

TEST_CASE("parse_angle") {
  CHECK(config::parse_angle("pi/4") == doctest::Approx(kPi / 4.0));
  CHECK(config::parse_angle("3pi/8") == doctest::Approx(3.0 * kPi / 8.0));
  CHECK(config::parse_angle("3*pi/8") == doctest::Approx(3.0 * kPi / 8.0));
  CHECK(config::parse_angle("-pi") == doctest::Approx(-kPi));
  CHECK(config::parse_angle(" 0.25 ") == 0.25);
  CHECK_THROWS_AS(config::parse_angle("pix"), Error);
  CHECK_THROWS_AS(config::parse_angle("abc"), Error);
}

TEST_CASE("config text parsing and diagnostics") {
  SweepSpec s;
  config::apply_config_text(s,
                            "# comment\n"
                            "quantity = memory\n"
                            "theta = pi/8, pi/4\n"
                            "kb_ratio = 0.25,1\n"
                            "rho_steps = 10   # trailing comment\n"
                            "\n"
                            "variant = truncated\n"
                            "seed = 42\n");
  CHECK(s.quantity == Quantity::memory);
  CHECK(s.theta_list.size() == 2);
  CHECK(s.kb_ratio_list == std::vector<double>{0.25, 1.0});
  CHECK(s.rho_range.steps == 10);
  CHECK(s.variant == scattering::Variant::truncated);
  CHECK(s.seed == 42);

  CHECK(config_error("k = 1\nbogus = 3\n").find("test.cfg:2") != std::string::npos);
  CHECK(config_error("bogus = 3\n").find("bogus") != std::string::npos);
  CHECK(config_error("rho_steps = abc\n").find("rho_steps") != std::string::npos);
  CHECK(config_error("just text\n").find("test.cfg:1") != std::string::npos);
  CHECK(config_error("quantity = nothing\n").find("quantity") != std::string::npos);
}

TEST_CASE("config file loading") {
  const std::string path = "tiqm_test_config.cfg";
  {
    std::ofstream f(path);
    f << "k = 2\nkj_ratio = 0.5\n";
  }
  SweepSpec s;
  config::apply_config_file(s, path);
  CHECK(s.k == 2.0);
  CHECK(s.kj_ratio == 0.5);
  std::remove(path.c_str());
  CHECK_THROWS_AS(config::apply_config_file(s, "/nonexistent/tiqm.cfg"), Error);
}

TEST_CASE("grid order is lexicographic over theta, kb_ratio, x") {
  SweepSpec s;
  s.quantity = Quantity::eigenvalues;
  s.theta_list = {0.1, 0.2};
  s.kb_ratio_list = {0.25, 1.0};
  s.rho_range = {1.0, 3.0, 3};
  CHECK(grid_size(s) == 12);
  const SweepResult r = run_sweep_serial(s);
  REQUIRE(r.rows.size() == 12);
  CHECK(r.header == columns(Quantity::eigenvalues));
  CHECK(r.rows[0][0] == "1");
  CHECK(r.rows[1][0] == "2");
  CHECK(r.rows[3][1] == "1");
  CHECK(r.rows[6][3] == "0.20000000000000001");
  CHECK(r.error_rows == 0);
}

TEST_CASE("divergence band rows are substituted or flagged") {
  SweepSpec s;
  s.quantity = Quantity::eigenvalues;
  s.theta_list = {kPi / 4.0};
  s.kb_ratio_list = {0.5};
  s.rho_range = {1.0, 20.0, 4};
  const SweepResult r = run_sweep_serial(s);
  for (const auto& row : r.rows) {
    CHECK(row.back() == "divergence_band_substituted");
    CHECK(row[2] == "0.48999999999999999");
  }
  CHECK(r.flagged_rows == 4);
  CHECK(r.error_rows == 0);
  CHECK(substitute_ratio(0.5) == 0.49);
  CHECK(substitute_ratio(0.5004) == 0.51);

  s.quantity = Quantity::uncertainty;
  s.k_range = {0.5, 2.0, 4};
  const SweepResult u = run_sweep_serial(s);
  for (const auto& row : u.rows) CHECK(row.back() == "divergence_band");
}

TEST_CASE("angular_diff vanishes without a field") {
  SweepSpec s;
  s.quantity = Quantity::angular_diff;
  s.kb_ratio_list = {0.0};
  const SweepResult r = run_sweep_serial(s);
  CHECK(r.rows.size() == static_cast<std::size_t>(s.k_range.steps));
  for (const auto& row : r.rows) {
    CHECK(std::stod(row[3]) == 0.0);
    CHECK(std::stod(row[5]) == 0.0);
  }
}

TEST_CASE("CSV is parseable and round-trips exactly") {
  SweepSpec s;
  s.quantity = Quantity::norm;
  s.k_range = {0.5, 2.0, 5};
  const SweepResult r = run_sweep_serial(s);
  const std::string csv = to_csv(r, s);
  std::stringstream in(csv);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  std::size_t first = 0;
  while (lines[first][0] == '#') ++first;
  CHECK(csv.find("# version=") != std::string::npos);
  CHECK(csv.find("# eigen_mode=") != std::string::npos);
  CHECK(split(lines[first]) == columns(Quantity::norm));
  REQUIRE(lines.size() - first - 1 == r.rows.size());
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    const auto cells = split(lines[first + 1 + i]);
    REQUIRE(cells.size() == r.header.size());
    for (std::size_t j = 0; j + 1 < cells.size(); ++j) {
      if (cells[j].empty()) continue;
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", std::strtod(cells[j].c_str(), nullptr));
      CHECK(cells[j] == buf);
    }
  }
}

TEST_CASE("parallel sweep equals the serial reference") {
  for (Quantity q : {Quantity::uncertainty, Quantity::memory, Quantity::eigenvalues,
                     Quantity::angular_diff, Quantity::norm}) {
    SweepSpec s;
    s.quantity = q;
    s.rho_range.steps = 20;
    s.k_range.steps = 8;
    CHECK(run_sweep_serial(s).rows == run_sweep(s, 3).rows);
  }
}

TEST_CASE("parsers reject unknown names") {
  CHECK_THROWS_AS(parse_quantity("energy"), Error);
  CHECK_THROWS_AS(parse_variant("half"), Error);
  CHECK_THROWS_AS(parse_eigen_mode("fast"), Error);
  CHECK(parse_eigen_mode("paper_literal") == qinfo::EigenMode::paper_literal);
}
