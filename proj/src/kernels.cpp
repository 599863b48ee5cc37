#include "cyclemod/kernels.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cyclemod::kernels {

namespace {

u128 d_value(const Modulus& m, std::uint64_t k, InversionVariant variant) {
  return compute_d(k, m, variant).value();
}

std::uint64_t steps_for(const Modulus& m, std::uint64_t k, InversionVariant variant) {
  StepCounter counter;
  const Residue a = compute_a(k, m);
  if (variant == InversionVariant::ct) {
    (void)inverse_ct(a, &counter);
  } else {
    (void)inverse_euclid(a, &counter);
  }
  return counter.steps;
}

Histogram run_length(std::span<const u128> sorted) {
  Histogram out;
  for (u128 v : sorted) {
    if (!out.empty() && out.back().first == v) {
      ++out.back().second;
    } else {
      out.emplace_back(v, 1);
    }
  }
  return out;
}

}  // namespace

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void residues_serial(const Modulus& m, std::uint64_t k_start, std::span<u128> out,
                     InversionVariant variant) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = d_value(m, k_start + i, variant);
}

void residues_parallel(const Modulus& m, std::uint64_t k_start, std::span<u128> out,
                       InversionVariant variant) {
  const auto n = static_cast<std::int64_t>(out.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = d_value(m, k_start + static_cast<std::uint64_t>(i), variant);
  }
}

Histogram histogram_serial(std::span<const u128> values) {
  std::map<u128, std::uint64_t> counts;
  for (u128 v : values) ++counts[v];
  return {counts.begin(), counts.end()};
}

Histogram histogram_parallel(std::span<const u128> values) {
  std::vector<u128> sorted(values.begin(), values.end());
  const std::size_t n = sorted.size();
  const int chunks = std::max(1, std::min<int>(max_threads(), static_cast<int>(n)));

  std::vector<std::size_t> bounds(static_cast<std::size_t>(chunks) + 1);
  for (int c = 0; c <= chunks; ++c) {
    bounds[static_cast<std::size_t>(c)] = n * static_cast<std::size_t>(c) / static_cast<std::size_t>(chunks);
  }

#pragma omp parallel for schedule(static)
  for (int c = 0; c < chunks; ++c) {
    std::sort(sorted.begin() + static_cast<std::ptrdiff_t>(bounds[static_cast<std::size_t>(c)]),
              sorted.begin() + static_cast<std::ptrdiff_t>(bounds[static_cast<std::size_t>(c) + 1]));
  }

  // Pairwise merge of the sorted runs.
  for (std::size_t width = 1; width < static_cast<std::size_t>(chunks); width *= 2) {
    for (std::size_t c = 0; c + width < static_cast<std::size_t>(chunks); c += 2 * width) {
      const std::size_t hi = std::min(c + 2 * width, static_cast<std::size_t>(chunks));
      std::inplace_merge(sorted.begin() + static_cast<std::ptrdiff_t>(bounds[c]),
                         sorted.begin() + static_cast<std::ptrdiff_t>(bounds[c + width]),
                         sorted.begin() + static_cast<std::ptrdiff_t>(bounds[hi]));
    }
  }
  return run_length(sorted);
}

StepRange step_range_serial(const Modulus& m, std::uint64_t k_start, std::uint64_t k_end,
                            InversionVariant variant) {
  StepRange range{std::numeric_limits<std::uint64_t>::max(), 0};
  for (std::uint64_t k = k_start; k <= k_end; ++k) {
    const std::uint64_t s = steps_for(m, k, variant);
    range.min = std::min(range.min, s);
    range.max = std::max(range.max, s);
  }
  return range;
}

StepRange step_range_parallel(const Modulus& m, std::uint64_t k_start, std::uint64_t k_end,
                              InversionVariant variant) {
  std::uint64_t lo = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t hi = 0;
  const auto n = static_cast<std::int64_t>(k_end - k_start + 1);
#pragma omp parallel for schedule(static) reduction(min : lo) reduction(max : hi)
  for (std::int64_t i = 0; i < n; ++i) {
    const std::uint64_t s = steps_for(m, k_start + static_cast<std::uint64_t>(i), variant);
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  }
  return {lo, hi};
}

}  // namespace cyclemod::kernels
