#pragma once

// Entropy Confidence Score over a d_k sequence:
//
//   ECS = 0.4 * CD + 0.4 * (1 - RUD) + 0.2 * (1 - MBI)
//
// CD  (cycle density)          distinct d_k / phi(M).
// RUD (uniformity deviation)   total-variation distance between the empirical
//                              d_k distribution and uniform on the unit group.
// MBI (modular bias index)     worst normalized excess of any of B equal-width
//                              buckets of [0, M) over that bucket's share of the
//                              unit group: max_b (f_b - u_b) / (1 - u_b).

#include <cstdint>

#include "cyclemod/seedgen.hpp"

namespace cyclemod {

inline constexpr double kWeightCycleDensity = 0.4;
inline constexpr double kWeightUniformity = 0.4;
inline constexpr double kWeightBias = 0.2;

inline constexpr unsigned kDefaultBuckets = 9;
inline constexpr unsigned kMaxBuckets = 1u << 20;
inline constexpr double kDefaultThreshold = 0.90;

struct EcsReport {
  unsigned p;
  std::uint64_t k_start;
  std::uint64_t k_end;
  unsigned bucket_count;
  double cd;
  double rud;
  double mbi;
  double ecs;
};

// Throws EmptySequence on an empty sequence.
double cycle_density(const SeedSequence& seq);
double residue_uniformity_deviation(const SeedSequence& seq);
// Throws OutOfRange unless 2 <= buckets <= kMaxBuckets.
double modular_bias_index(const SeedSequence& seq, unsigned buckets = kDefaultBuckets);

// Weighted sum of the three components.
double combine(double cd, double rud, double mbi);

EcsReport score(const SeedSequence& seq, unsigned buckets = kDefaultBuckets);

// ecs >= threshold. Throws OutOfRange unless 0 <= threshold <= 1.
bool admit(const EcsReport& report, double threshold = kDefaultThreshold);

}  // namespace cyclemod
