// Times the verification and enumeration kernels, serial reference vs the
// OpenMP path, and prints the speedup table.

#include <chrono>
#include <cstdio>

#include "gsnet/search.hpp"
#include "gsnet/sweeps.hpp"

using namespace gsnet;

namespace {

double time_call(const std::function<void()>& fn) {
  auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

void report(const char* kernel, std::size_t work, double serial, double parallel,
            int threads) {
  std::printf("%-28s %8zu %10.3fs %10.3fs %7.2fx (%d threads)\n", kernel, work,
              serial, parallel, serial / parallel, threads);
}

}  // namespace

int main() {
  const int threads = hardware_threads();
  std::printf("%-28s %8s %11s %11s %9s\n", "kernel", "cases", "serial",
              "parallel", "speedup");

  {
    auto cases = exhaustive_rule_cases(5);
    auto extra = random_rule_cases(200, 9, 42);
    cases.insert(cases.end(), extra.begin(), extra.end());
    SweepOutcome serial = run_rule_sweep_serial(cases);
    SweepOutcome parallel = run_rule_sweep(cases, threads);
    if (serial.failures != parallel.failures) {
      std::printf("MISMATCH between serial and parallel rule sweep!\n");
      return 1;
    }
    report("measurement-rule sweep", cases.size(), serial.seconds,
           parallel.seconds, threads);
  }

  {
    auto cases = exhaustive_lc_cases(5);
    auto extra = random_lc_cases(400, 10, 43);
    cases.insert(cases.end(), extra.begin(), extra.end());
    SweepOutcome serial = run_lc_unitary_sweep_serial(cases);
    SweepOutcome parallel = run_lc_unitary_sweep(cases, threads);
    if (serial.failures != parallel.failures) {
      std::printf("MISMATCH between serial and parallel unitary sweep!\n");
      return 1;
    }
    report("lc-unitary group sweep", cases.size(), serial.seconds,
           parallel.seconds, threads);
  }

  {
    std::vector<ClassifiedConfig> serial_rows, parallel_rows;
    double serial = time_call([&] { serial_rows = classify_all(13, 2, 1); });
    double parallel =
        time_call([&] { parallel_rows = classify_all(13, 2, threads); });
    for (std::size_t i = 0; i < serial_rows.size(); ++i) {
      if (!(serial_rows[i].topology.same_shape(parallel_rows[i].topology))) {
        std::printf("MISMATCH between serial and parallel classification!\n");
        return 1;
      }
    }
    report("removal-set classification", serial_rows.size(), serial, parallel,
           threads);
  }

  return 0;
}
