#include "cyclemod/ecs.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "cyclemod/errors.hpp"
#include "cyclemod/kernels.hpp"

namespace cyclemod {

namespace {

void require_nonempty(const SeedSequence& seq) {
  if (seq.records.empty()) throw EmptySequence("sequence has no records");
}

kernels::Histogram histogram_of(const SeedSequence& seq) {
  const std::vector<u128> d = seq.d_values();
  return kernels::histogram_parallel(d);
}

// Units (values coprime to 3) in [0, n).
u128 units_below(u128 n) { return n - (n + 2) / 3; }

// Lower edges of the equal-width buckets: edge_b = ceil(b * M / B), edge_B = M.
// x falls in bucket floor(x * B / M).
std::vector<u128> bucket_edges(u128 m, unsigned buckets) {
  const u128 q = m / buckets;
  const u128 r = m % buckets;
  std::vector<u128> edges(buckets + 1);
  for (unsigned b = 0; b <= buckets; ++b) {
    const u128 rb = r * b;
    edges[b] = q * b + rb / buckets + (rb % buckets != 0 ? 1 : 0);
  }
  return edges;
}

}  // namespace

double cycle_density(const SeedSequence& seq) {
  require_nonempty(seq);
  const auto hist = histogram_of(seq);
  return static_cast<double>(hist.size()) / static_cast<double>(seq.modulus.phi());
}

double residue_uniformity_deviation(const SeedSequence& seq) {
  require_nonempty(seq);
  const auto hist = histogram_of(seq);
  const double total = static_cast<double>(seq.records.size());
  const double phi = static_cast<double>(seq.modulus.phi());
  const double uniform = 1.0 / phi;

  double sum = 0.0;
  for (const auto& [value, count] : hist) {
    sum += std::fabs(static_cast<double>(count) / total - uniform);
  }
  // Units never visited contribute 1/phi each.
  sum += static_cast<double>(seq.modulus.phi() - hist.size()) / phi;
  return std::clamp(0.5 * sum, 0.0, 1.0);
}

double modular_bias_index(const SeedSequence& seq, unsigned buckets) {
  require_nonempty(seq);
  if (buckets < 2 || buckets > kMaxBuckets) {
    throw OutOfRange("bucket count must lie in [2, " + std::to_string(kMaxBuckets) + "], got " +
                     std::to_string(buckets));
  }
  const u128 m = seq.modulus.value();
  const double phi = static_cast<double>(seq.modulus.phi());
  const auto edges = bucket_edges(m, buckets);

  std::vector<std::uint64_t> counts(buckets, 0);
  for (const auto& [value, count] : histogram_of(seq)) {
    const auto it = std::upper_bound(edges.begin(), edges.end(), value);
    counts[static_cast<std::size_t>(it - edges.begin() - 1)] += count;
  }

  const double total = static_cast<double>(seq.records.size());
  double worst = 0.0;
  for (unsigned b = 0; b < buckets; ++b) {
    const double share = static_cast<double>(units_below(edges[b + 1]) - units_below(edges[b])) / phi;
    const double observed = static_cast<double>(counts[b]) / total;
    // Two units (1 and M-1) always land in different buckets, so share < 1.
    worst = std::max(worst, (observed - share) / (1.0 - share));
  }
  return std::clamp(worst, 0.0, 1.0);
}

double combine(double cd, double rud, double mbi) {
  return kWeightCycleDensity * cd + kWeightUniformity * (1.0 - rud) + kWeightBias * (1.0 - mbi);
}

EcsReport score(const SeedSequence& seq, unsigned buckets) {
  const double cd = cycle_density(seq);
  const double rud = residue_uniformity_deviation(seq);
  const double mbi = modular_bias_index(seq, buckets);
  return EcsReport{seq.modulus.p(), seq.k_start, seq.k_end, buckets, cd, rud, mbi,
                   combine(cd, rud, mbi)};
}

bool admit(const EcsReport& report, double threshold) {
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw OutOfRange("threshold must lie in [0, 1]");
  }
  return report.ecs >= threshold;
}

}  // namespace cyclemod
