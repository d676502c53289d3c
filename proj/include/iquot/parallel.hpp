#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

namespace iquot {

// Worker count for verification sweeps: IQUOT_WORKERS when set, otherwise the
// available hardware parallelism.
inline int worker_count() {
  if (const char* env = std::getenv("IQUOT_WORKERS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

enum class SweepResult { ok, violation, blocked, skipped };

struct SweepOutcome {
  std::int64_t first_violation = -1;  // global minimum index, -1 if none
  std::int64_t checked = 0;
  std::int64_t violations = 0;
  std::int64_t blocked = 0;
};

// Evaluates fn(i) for i in [0, n) over worker threads. Each worker owns a
// contiguous chunk, so the merged outcome is independent of scheduling.
template <class Fn>
SweepOutcome parallel_sweep(std::int64_t n, Fn&& fn) {
  const int workers = n < 4096 ? 1 : std::min<std::int64_t>(worker_count(), std::max<std::int64_t>(n, 1));
  std::vector<SweepOutcome> partial(workers);
  auto run = [&](int w) {
    const std::int64_t lo = n * w / workers;
    const std::int64_t hi = n * (w + 1) / workers;
    SweepOutcome& out = partial[w];
    for (std::int64_t i = lo; i < hi; ++i) {
      switch (fn(i)) {
        case SweepResult::ok:
          ++out.checked;
          break;
        case SweepResult::violation:
          ++out.checked;
          ++out.violations;
          if (out.first_violation < 0) out.first_violation = i;
          break;
        case SweepResult::blocked:
          ++out.blocked;
          break;
        case SweepResult::skipped:
          break;
      }
    }
  };
  if (workers == 1) {
    run(0);
    return partial[0];
  }
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (int w = 0; w < workers; ++w) threads.emplace_back(run, w);
  for (std::thread& t : threads) t.join();
  SweepOutcome merged;
  for (const SweepOutcome& p : partial) {
    merged.checked += p.checked;
    merged.violations += p.violations;
    merged.blocked += p.blocked;
    if (p.first_violation >= 0 &&
        (merged.first_violation < 0 || p.first_violation < merged.first_violation)) {
      merged.first_violation = p.first_violation;
    }
  }
  return merged;
}

}  // namespace iquot
