// Compares the serial reference kernels against the OpenMP ones.

#include <chrono>
#include <cstdio>

#include "mutvis/conflict.hpp"
#include "mutvis/constructions.hpp"
#include "mutvis/visibility.hpp"

using namespace mutvis;

namespace {

template <typename F>
double time_ms(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

void row(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-28s serial %9.2f ms   parallel %9.2f ms   speedup %.2fx\n",
              name, serial_ms, parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main() {
  {
    const HammingShape shape({30, 30, 30});
    std::uint64_t a = 0, b = 0;
    const double ts = time_ms([&] { a = conflict_pair_count_scan_serial(shape); });
    const double tp = time_ms([&] { b = conflict_pair_count_scan(shape); });
    if (a != b) {
      std::printf("pair-count mismatch: %llu vs %llu\n",
                  static_cast<unsigned long long>(a),
                  static_cast<unsigned long long>(b));
      return 1;
    }
    row("pair scan (30,30,30)", ts, tp);
  }
  {
    const HammingShape shape({16, 16, 16});
    long long a = 0, b = 0;
    const double ts =
        time_ms([&] { a = build_conflict_graph_serial(shape).edge_count(); });
    const double tp =
        time_ms([&] { b = build_conflict_graph(shape).edge_count(); });
    if (a != b) {
      std::printf("conflict-build mismatch: %lld vs %lld\n", a, b);
      return 1;
    }
    row("conflict build (16,16,16)", ts, tp);
  }
  {
    const HammingShape shape({20, 20, 20});
    const auto set = construct_three_factor(shape);
    bool a = false, b = false;
    const double ts = time_ms([&] {
      for (int i = 0; i < 200; ++i) a = is_tmv_hamming_serial(shape, set);
    });
    const double tp = time_ms([&] {
      for (int i = 0; i < 200; ++i) b = is_tmv_hamming(shape, set);
    });
    if (a != b || !a) {
      std::printf("tmv-check mismatch\n");
      return 1;
    }
    row("tmv check x200 (20,20,20)", ts, tp);
  }
  return 0;
}
