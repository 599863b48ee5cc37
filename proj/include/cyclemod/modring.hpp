#pragma once

// Exact arithmetic in Z/3^pZ with 128-bit residues.
//
// Two inversion routes are provided. inverse_euclid is the textbook extended
// Euclidean algorithm and runs a data-dependent number of iterations.
// inverse_ct raises the operand to phi(M) - 1 with a square-and-multiply
// ladder of fixed length bit_length(M), selecting the multiply branchlessly,
// so its step count depends on p only.

#include <cstdint>

#include "cyclemod/int128.hpp"

namespace cyclemod {

// 3^80 < 2^127, so doubling any residue never wraps a u128.
inline constexpr unsigned kMaxExponent = 80;

class Modulus {
 public:
  // Throws OutOfRange unless 1 <= p <= kMaxExponent.
  static Modulus make(unsigned p);

  unsigned p() const { return p_; }
  u128 value() const { return value_; }
  // Euler totient 2 * 3^(p-1): the order of the unit group.
  u128 phi() const { return phi_; }
  // Bits needed to encode any residue: ceil(log2 M) since M is odd.
  unsigned bit_width() const { return bits_; }

  bool is_unit(u128 x) const { return x % 3 != 0; }

  friend bool operator==(const Modulus& a, const Modulus& b) { return a.p_ == b.p_; }

 private:
  Modulus(unsigned p, u128 value, u128 phi, unsigned bits)
      : p_(p), value_(value), phi_(phi), bits_(bits) {}

  unsigned p_;
  u128 value_;
  u128 phi_;
  unsigned bits_;
};

Modulus make_modulus(unsigned p);

// Canonical element of Z/MZ: 0 <= value < M always.
class Residue {
 public:
  // Reduces `value` mod M.
  Residue(const Modulus& modulus, u128 value) : modulus_(modulus), value_(value % modulus.value()) {}

  u128 value() const { return value_; }
  const Modulus& modulus() const { return modulus_; }

  friend bool operator==(const Residue& a, const Residue& b) {
    return a.modulus_ == b.modulus_ && a.value_ == b.value_;
  }

 private:
  Modulus modulus_;
  u128 value_;
};

// Optional instrumentation for the inversion loops. Each call adds the number
// of loop iterations it executed.
struct StepCounter {
  std::uint64_t steps = 0;
};

// Raw kernels on canonical values; `m` must be a valid 3^p modulus and the
// operands already reduced.
namespace detail {
u128 mul_mod_raw(u128 a, u128 b, u128 m);
u128 pow_mod_raw(u128 base, std::uint64_t exp, u128 m);
}  // namespace detail

// Throws ModulusMismatch when the operands live in different rings.
Residue mul_mod(const Residue& a, const Residue& b);
Residue pow_mod(const Residue& base, std::uint64_t exp);
Residue neg_mod(const Residue& a);

// Throws NotInvertible when 3 divides a.
Residue inverse_euclid(const Residue& a, StepCounter* counter = nullptr);
Residue inverse_ct(const Residue& a, StepCounter* counter = nullptr);

// Number of ladder steps inverse_ct executes for modulus `m`.
unsigned ct_ladder_steps(const Modulus& m);

}  // namespace cyclemod
