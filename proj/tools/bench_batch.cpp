// Times the parallel batch kernels against their serial references on
// synthetic workloads and reports the speedup.

#include <chrono>
#include <cstdio>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "stabiliscope/batch.hpp"

using namespace stabiliscope;

namespace {

using clock_type = std::chrono::steady_clock;

double ms_since(clock_type::time_point t0) {
  return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

Rat random_unit_rat(std::mt19937_64& rng, int depth) {
  Rat lo(0), hi(1);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> steps(1, depth);
  const int k = steps(rng);
  Rat m = mediant(lo, hi);
  for (int i = 0; i < k; ++i) {
    if (coin(rng)) lo = m; else hi = m;
    m = mediant(lo, hi);
  }
  return m;
}

template <typename F>
double timed(const char* label, F&& f) {
  const auto t0 = clock_type::now();
  f();
  const double ms = ms_since(t0);
  std::printf("  %-28s %9.2f ms\n", label, ms);
  return ms;
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
  std::printf("openmp: disabled (serial build)\n");
#endif
  std::mt19937_64 rng(20240817);

  // Envelope evaluation sweep.
  {
    const PLMap tent = build_tf({2, {{4, -3}, {0, 3}}});
    std::vector<Rat> qs;
    qs.reserve(400000);
    for (int i = 0; i < 400000; ++i) qs.push_back(random_unit_rat(rng, 18));
    std::printf("eval_many, %zu points\n", qs.size());
    std::vector<Rat> serial, parallel;
    const double ts = timed("serial", [&] { serial = batch::eval_many_serial(tent, qs); });
    const double tp = timed("parallel", [&] { parallel = batch::eval_many(tent, qs); });
    std::printf("  agree: %s, speedup %.2fx\n", serial == parallel ? "yes" : "NO",
                ts / tp);
  }

  // Lift-trajectory sweep.
  {
    std::vector<LiftState> states;
    std::uniform_int_distribution<std::size_t> count(1, 8), len(1, 600), extra(0, 4);
    for (int i = 0; i < 60000; ++i) {
      std::multiset<std::size_t> lengths;
      const std::size_t k = count(rng);
      for (std::size_t j = 0; j < k; ++j) lengths.insert(len(rng));
      const std::size_t comp = lengths.size() + extra(rng);
      states.emplace_back(comp, lengths,
                          std::min(comp, lengths.count(1)));
    }
    std::printf("lift_counts, %zu states\n", states.size());
    std::vector<std::size_t> serial, parallel;
    const double ts = timed("serial", [&] { serial = batch::lift_counts_serial(states); });
    const double tp = timed("parallel", [&] { parallel = batch::lift_counts(states); });
    std::printf("  agree: %s, speedup %.2fx\n", serial == parallel ? "yes" : "NO",
                ts / tp);
  }
  return 0;
}
