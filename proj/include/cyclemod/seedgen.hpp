#pragma once

// The inverse-consistent residue sequence d_k = -(2^(k-1))^-1 mod 3^p, its
// orbit over one period, and the integer identity
//
//   3^p (s + 1) - 1 = 2^(k-1) (2 * 3^p * n + d)
//
// from which the sequence is derived.

#include <cstdint>
#include <vector>

#include "cyclemod/int128.hpp"
#include "cyclemod/modring.hpp"

namespace cyclemod {

enum class InversionVariant { euclid, ct };

enum class Execution { serial, parallel };

const char* to_string(InversionVariant variant);

struct SeedRecord {
  std::uint64_t k;
  Residue a_k;
  Residue d_k;
};

struct SeedSequence {
  Modulus modulus;
  std::uint64_t k_start;
  std::uint64_t k_end;
  // records[i].k == k_start + i
  std::vector<SeedRecord> records;

  std::vector<u128> d_values() const;
};

// Orbits are materialized in memory; above this exponent the unit group is
// too large to enumerate (phi(3^16) is about 2.9e7).
inline constexpr unsigned kMaxOrbitExponent = 16;

// Consecutive k-ranges larger than this are refused by generate_sequence.
inline constexpr std::uint64_t kMaxSequenceLength = std::uint64_t{1} << 26;

struct Orbit {
  Modulus modulus;
  // Sorted ascending, no duplicates.
  std::vector<u128> distinct_values;
  std::uint64_t cycle_length;
};

struct IdentityWitness {
  unsigned p;
  std::uint64_t s;
  u128 A;
  unsigned k;
  u128 n;
  // Unreduced: 0 <= d < 2 * 3^p.
  u128 d;
};

// 2^(k-1) mod M. k >= 1.
Residue compute_a(std::uint64_t k, const Modulus& m);

// -(a_k)^-1 mod M via the chosen inversion route.
Residue compute_d(std::uint64_t k, const Modulus& m, InversionVariant variant = InversionVariant::ct);

// Throws OutOfRange unless 1 <= k_start <= k_end and the range length is at
// most kMaxSequenceLength. Parallel and serial execution are bit-identical.
SeedSequence generate_sequence(unsigned p, std::uint64_t k_start, std::uint64_t k_end,
                               InversionVariant variant = InversionVariant::ct,
                               Execution execution = Execution::parallel);

// Distinct d_k over k = 1..phi(M). Throws OutOfRange for p > kMaxOrbitExponent.
Orbit orbit(unsigned p, InversionVariant variant = InversionVariant::ct,
            Execution execution = Execution::parallel);

// k - 1 is the full 2-adic valuation of A, so the quotient is odd and the
// decomposition unique. Throws OutOfRange if A does not fit in 128 bits.
IdentityWitness decompose_identity(unsigned p, std::uint64_t s);

// True iff the identity holds exactly and d reduces to compute_d(k).
bool verify_identity(const IdentityWitness& w);

}  // namespace cyclemod
