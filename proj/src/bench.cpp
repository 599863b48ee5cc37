#include "cyclemod/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#if defined(__linux__)
#include <sched.h>
#endif

#include "cyclemod/errors.hpp"
#include "cyclemod/kernels.hpp"

namespace cyclemod {

namespace {

void require_range(std::uint64_t k_start, std::uint64_t k_end) {
  if (k_start == 0 || k_end < k_start) {
    throw OutOfRange("k-range must satisfy 1 <= k_start <= k_end");
  }
  if (k_end - k_start >= kMaxSequenceLength) throw OutOfRange("k-range too long");
}

// Restricts the calling thread to the CPU it is running on, restoring the
// previous mask on destruction. No-op where affinity is not supported.
class CpuPin {
 public:
  CpuPin() {
#if defined(__linux__)
    if (sched_getaffinity(0, sizeof(saved_), &saved_) != 0) return;
    const int cpu = sched_getcpu();
    if (cpu < 0) return;
    cpu_set_t one;
    CPU_ZERO(&one);
    CPU_SET(cpu, &one);
    pinned_ = sched_setaffinity(0, sizeof(one), &one) == 0;
#endif
  }
  ~CpuPin() {
#if defined(__linux__)
    if (pinned_) sched_setaffinity(0, sizeof(saved_), &saved_);
#endif
  }
  CpuPin(const CpuPin&) = delete;
  CpuPin& operator=(const CpuPin&) = delete;

 private:
#if defined(__linux__)
  cpu_set_t saved_{};
#endif
  bool pinned_ = false;
};

// Keeps the optimizer from discarding the inversion result.
volatile std::uint64_t g_sink = 0;

u128 invert(const Residue& a, InversionVariant variant) {
  return variant == InversionVariant::ct ? inverse_ct(a).value() : inverse_euclid(a).value();
}

}  // namespace

IterationRange count_iterations(InversionVariant variant, unsigned p, std::uint64_t k_start,
                                std::uint64_t k_end) {
  require_range(k_start, k_end);
  const Modulus m = Modulus::make(p);
  const auto range = kernels::step_range_parallel(m, k_start, k_end, variant);
  return {range.min, range.max};
}

TimingStats time_inversion(InversionVariant variant, unsigned p, std::uint64_t k_start,
                           std::uint64_t k_end, unsigned reps) {
  using Clock = std::chrono::steady_clock;
  if (!Clock::is_steady) throw ClockUnavailable("no monotonic clock on this platform");
  if (reps < kMinTimingReps) {
    throw OutOfRange("reps must be >= " + std::to_string(kMinTimingReps) + ", got " + std::to_string(reps));
  }
  require_range(k_start, k_end);
  const Modulus m = Modulus::make(p);

  std::vector<Residue> operands;
  operands.reserve(k_end - k_start + 1);
  for (std::uint64_t k = k_start; k <= k_end; ++k) operands.push_back(compute_a(k, m));

  const IterationRange iters = count_iterations(variant, p, k_start, k_end);

  CpuPin pin;
  for (const auto& a : operands) g_sink = g_sink + low64(invert(a, variant));

  std::vector<double> samples;
  samples.reserve(operands.size() * reps);
  for (unsigned rep = 0; rep < reps; ++rep) {
    for (const auto& a : operands) {
      const auto t0 = Clock::now();
      const u128 inv = invert(a, variant);
      const auto t1 = Clock::now();
      g_sink = g_sink + low64(inv);
      samples.push_back(std::chrono::duration<double, std::nano>(t1 - t0).count());
    }
  }

  const double n = static_cast<double>(samples.size());
  const double mean = std::accumulate(samples.begin(), samples.end(), 0.0) / n;
  double sq = 0.0;
  for (double s : samples) sq += (s - mean) * (s - mean);
  const double stddev = std::sqrt(sq / n);
  const auto [lo, hi] = std::minmax_element(samples.begin(), samples.end());
  const double jitter = *hi - *lo;

  std::vector<double> sorted(samples);
  std::sort(sorted.begin(), sorted.end());
  const std::size_t mid = sorted.size() / 2;
  const double median = sorted.size() % 2 == 1 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);

  return TimingStats{variant,
                     p,
                     k_start,
                     k_end,
                     reps,
                     samples.size(),
                     mean,
                     median,
                     jitter,
                     mean > 0.0 ? stddev / mean : 0.0,
                     iters.iter_min,
                     iters.iter_max};
}

Comparison compare_report(unsigned p, std::uint64_t k_start, std::uint64_t k_end, unsigned reps) {
  Comparison out{time_inversion(InversionVariant::euclid, p, k_start, k_end, reps),
                 time_inversion(InversionVariant::ct, p, k_start, k_end, reps), false, 0, false};
  out.ct_constant_steps = out.ct.iter_min == out.ct.iter_max;
  out.euclid_step_spread = out.euclid.iter_max - out.euclid.iter_min;
  out.ct_cv_not_worse = out.ct.cv <= out.euclid.cv;
  return out;
}

}  // namespace cyclemod
