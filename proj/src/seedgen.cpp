#include "cyclemod/seedgen.hpp"

#include <string>

#include "cyclemod/errors.hpp"
#include "cyclemod/kernels.hpp"

namespace cyclemod {

const char* to_string(InversionVariant variant) {
  return variant == InversionVariant::ct ? "ct" : "euclid";
}

std::vector<u128> SeedSequence::d_values() const {
  std::vector<u128> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(r.d_k.value());
  return out;
}

Residue compute_a(std::uint64_t k, const Modulus& m) {
  if (k == 0) throw OutOfRange("k must be >= 1");
  return pow_mod(Residue(m, 2), k - 1);
}

Residue compute_d(std::uint64_t k, const Modulus& m, InversionVariant variant) {
  const Residue a = compute_a(k, m);
  // a is a power of 2, hence always a unit mod 3^p.
  const Residue inv = variant == InversionVariant::ct ? inverse_ct(a) : inverse_euclid(a);
  return neg_mod(inv);
}

SeedSequence generate_sequence(unsigned p, std::uint64_t k_start, std::uint64_t k_end,
                               InversionVariant variant, Execution execution) {
  const Modulus m = Modulus::make(p);
  if (k_start == 0 || k_end < k_start) {
    throw OutOfRange("k-range must satisfy 1 <= k_start <= k_end, got [" + std::to_string(k_start) +
                     ", " + std::to_string(k_end) + "]");
  }
  if (k_end - k_start >= kMaxSequenceLength) {
    throw OutOfRange("k-range longer than " + std::to_string(kMaxSequenceLength));
  }

  std::vector<u128> d(k_end - k_start + 1);
  if (execution == Execution::parallel) {
    kernels::residues_parallel(m, k_start, d, variant);
  } else {
    kernels::residues_serial(m, k_start, d, variant);
  }

  SeedSequence seq{m, k_start, k_end, {}};
  seq.records.reserve(d.size());
  Residue a = compute_a(k_start, m);
  const Residue two(m, 2);
  for (std::size_t i = 0; i < d.size(); ++i) {
    seq.records.push_back(SeedRecord{k_start + i, a, Residue(m, d[i])});
    a = mul_mod(a, two);
  }
  return seq;
}

Orbit orbit(unsigned p, InversionVariant variant, Execution execution) {
  if (p > kMaxOrbitExponent) {
    throw OutOfRange("orbit enumeration is limited to p <= " + std::to_string(kMaxOrbitExponent));
  }
  const Modulus m = Modulus::make(p);
  std::vector<u128> d(static_cast<std::size_t>(m.phi()));
  kernels::Histogram hist;
  if (execution == Execution::parallel) {
    kernels::residues_parallel(m, 1, d, variant);
    hist = kernels::histogram_parallel(d);
  } else {
    kernels::residues_serial(m, 1, d, variant);
    hist = kernels::histogram_serial(d);
  }

  Orbit out{m, {}, 0};
  out.distinct_values.reserve(hist.size());
  for (const auto& [value, count] : hist) out.distinct_values.push_back(value);
  out.cycle_length = out.distinct_values.size();
  return out;
}

IdentityWitness decompose_identity(unsigned p, std::uint64_t s) {
  const Modulus m = Modulus::make(p);
  const auto scaled = checked_mul(m.value(), static_cast<u128>(s) + 1);
  if (!scaled) throw OutOfRange("3^p (s + 1) overflows 128 bits");
  const u128 a = *scaled - 1;

  const unsigned valuation = trailing_zeros(a);
  const u128 quotient = a >> valuation;
  const u128 period = 2 * m.value();
  return IdentityWitness{p, s, a, valuation + 1, quotient / period, quotient % period};
}

bool verify_identity(const IdentityWitness& w) {
  if (w.p == 0 || w.p > kMaxExponent || w.k == 0 || w.k > 128) return false;
  const Modulus m = Modulus::make(w.p);

  const auto scaled = checked_mul(m.value(), static_cast<u128>(w.s) + 1);
  if (!scaled || *scaled - 1 != w.A) return false;

  // 2^(k-1) * (2 * 3^p * n + d), all checked.
  const auto period = checked_mul(2, m.value());
  if (!period) return false;
  const auto pn = checked_mul(*period, w.n);
  if (!pn) return false;
  const auto inner = checked_add(*pn, w.d);
  if (!inner) return false;
  if (w.k - 1 >= 128) return false;
  const auto rhs = checked_mul(u128{1} << (w.k - 1), *inner);
  if (!rhs || *rhs != w.A) return false;

  return w.d % m.value() == compute_d(w.k, m).value();
}

}  // namespace cyclemod
