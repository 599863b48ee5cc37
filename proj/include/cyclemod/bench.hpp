#pragma once

// Timing uniformity of the two inversion routes. Exact loop-iteration counts
// are the portable, falsifiable signal; wall-clock statistics are advisory and
// depend on the host.

#include <cstdint>

#include "cyclemod/seedgen.hpp"

namespace cyclemod {

inline constexpr unsigned kMinTimingReps = 30;

struct IterationRange {
  std::uint64_t iter_min;
  std::uint64_t iter_max;
};

struct TimingStats {
  InversionVariant variant;
  unsigned p;
  std::uint64_t k_start;
  std::uint64_t k_end;
  unsigned reps;
  std::uint64_t samples;
  double mean_ns;
  double median_ns;
  double max_jitter_ns;  // slowest minus fastest call
  double cv;             // stddev / mean
  std::uint64_t iter_min;
  std::uint64_t iter_max;
};

struct Comparison {
  TimingStats euclid;
  TimingStats ct;
  bool ct_constant_steps;
  std::uint64_t euclid_step_spread;
  // Advisory only; scheduler noise can flip it.
  bool ct_cv_not_worse;
};

// Inverts a_k for every k in [k_start, k_end] and reports the extreme loop
// counts. Throws OutOfRange on a bad range.
IterationRange count_iterations(InversionVariant variant, unsigned p, std::uint64_t k_start,
                                std::uint64_t k_end);

// Single-threaded, pinned to the current CPU where the platform allows. One
// untimed warm-up pass precedes the measured reps. Throws OutOfRange when
// reps < kMinTimingReps, ClockUnavailable without a steady clock.
TimingStats time_inversion(InversionVariant variant, unsigned p, std::uint64_t k_start,
                           std::uint64_t k_end, unsigned reps);

Comparison compare_report(unsigned p, std::uint64_t k_start, std::uint64_t k_end, unsigned reps);

}  // namespace cyclemod
