#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

#include "tiqm/qinfo.hpp"
#include "tiqm/sweep.hpp"

namespace {

// Best of `reps` wall-clock runs, in milliseconds.
double time_ms(const std::function<void()>& body, int reps = 3) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    body();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

void report(const char* name, double serial, double parallel, bool identical) {
  std::printf("%-28s serial %9.2f ms  parallel %9.2f ms  speedup %5.2fx  %s\n", name, serial,
              parallel, serial / parallel, identical ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
  const int threads = omp_get_max_threads();
  std::printf("OpenMP threads: %d\n", threads);
  bool all_identical = true;

  for (tiqm::sweep::Quantity q :
       {tiqm::sweep::Quantity::uncertainty, tiqm::sweep::Quantity::memory,
        tiqm::sweep::Quantity::eigenvalues}) {
    tiqm::sweep::SweepSpec spec;
    spec.quantity = q;
    tiqm::sweep::SweepResult s;
    tiqm::sweep::SweepResult p;
    const double ts = time_ms([&] { s = tiqm::sweep::run_sweep_serial(spec); });
    const double tp = time_ms([&] { p = tiqm::sweep::run_sweep(spec, threads); });
    const bool same = s.rows == p.rows;
    all_identical = all_identical && same;
    const std::string name = "sweep " + std::string(tiqm::sweep::to_string(q));
    report(name.c_str(), ts, tp, same);
  }

  const auto state = tiqm::qinfo::random_pure_state(3, 0);
  constexpr std::uint64_t n = 4'000'000;
  tiqm::qinfo::Counts s{};
  tiqm::qinfo::Counts p{};
  const double ts = time_ms(
      [&] { s = tiqm::qinfo::sample_measurements_serial(state, tiqm::qinfo::Basis::X, n, 9); });
  const double tp =
      time_ms([&] { p = tiqm::qinfo::sample_measurements(state, tiqm::qinfo::Basis::X, n, 9); });
  all_identical = all_identical && s == p;
  report("sampler 4e6 draws", ts, tp, s == p);

  return all_identical ? 0 : 1;
}
