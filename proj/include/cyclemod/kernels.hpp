#pragma once

// Data-parallel kernels behind seedgen, ecs and bench. Every kernel has a
// plain serial form, kept as the reference the OpenMP form is tested against.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "cyclemod/int128.hpp"
#include "cyclemod/modring.hpp"
#include "cyclemod/seedgen.hpp"

namespace cyclemod::kernels {

// out[i] = d_{k_start + i}
void residues_serial(const Modulus& m, std::uint64_t k_start, std::span<u128> out,
                     InversionVariant variant);
void residues_parallel(const Modulus& m, std::uint64_t k_start, std::span<u128> out,
                       InversionVariant variant);

// (value, count) pairs sorted by value.
using Histogram = std::vector<std::pair<u128, std::uint64_t>>;

Histogram histogram_serial(std::span<const u128> values);
Histogram histogram_parallel(std::span<const u128> values);

struct StepRange {
  std::uint64_t min;
  std::uint64_t max;
};

// Inversion loop iteration counts over operands a_k, k in [k_start, k_end].
StepRange step_range_serial(const Modulus& m, std::uint64_t k_start, std::uint64_t k_end,
                            InversionVariant variant);
StepRange step_range_parallel(const Modulus& m, std::uint64_t k_start, std::uint64_t k_end,
                              InversionVariant variant);

// Threads OpenMP will use (1 when built without OpenMP).
int max_threads();

}  // namespace cyclemod::kernels
