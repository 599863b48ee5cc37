#include "cyclemod/modring.hpp"

#include <string>

#include "cyclemod/errors.hpp"

namespace cyclemod {

Modulus Modulus::make(unsigned p) {
  if (p == 0 || p > kMaxExponent) {
    throw OutOfRange("exponent p must lie in [1, " + std::to_string(kMaxExponent) + "], got " +
                     std::to_string(p));
  }
  u128 power = 1;
  for (unsigned i = 1; i < p; ++i) power *= 3;
  const u128 value = power * 3;
  return Modulus(p, value, power * 2, bit_length(value));
}

Modulus make_modulus(unsigned p) { return Modulus::make(p); }

namespace detail {

namespace {

// All-ones when `bit` is 1, zero otherwise.
constexpr u128 mask_from_bit(u128 bit) { return u128{0} - bit; }

// r - m if r >= m, else r; no branch on r.
constexpr u128 reduce_once(u128 r, u128 m) {
  const u128 ge = static_cast<u128>(r >= m);
  return r - (m & mask_from_bit(ge));
}

// Shift-and-add multiplication for moduli too wide for a 128-bit product.
// Relies on m < 2^127 so 2r and r + a never wrap.
u128 mul_mod_wide(u128 a, u128 b, u128 m) {
  u128 r = 0;
  for (int i = 127; i >= 0; --i) {
    r = reduce_once(r << 1, m);
    const u128 bit = (b >> i) & 1;
    r = reduce_once(r + (a & mask_from_bit(bit)), m);
  }
  return r;
}

}  // namespace

u128 mul_mod_raw(u128 a, u128 b, u128 m) {
  if (fits_u64(m)) return (a * b) % m;
  return mul_mod_wide(a, b, m);
}

u128 pow_mod_raw(u128 base, std::uint64_t exp, u128 m) {
  u128 result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mul_mod_raw(result, base, m);
    base = mul_mod_raw(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace detail

namespace {

void require_same_ring(const Residue& a, const Residue& b) {
  if (!(a.modulus() == b.modulus())) {
    throw ModulusMismatch("residues belong to 3^" + std::to_string(a.modulus().p()) + " and 3^" +
                          std::to_string(b.modulus().p()));
  }
}

[[noreturn]] void throw_not_invertible(const Residue& a) {
  throw NotInvertible(to_string(a.value()) + " is not invertible mod " +
                      to_string(a.modulus().value()));
}

}  // namespace

Residue mul_mod(const Residue& a, const Residue& b) {
  require_same_ring(a, b);
  const u128 m = a.modulus().value();
  return Residue(a.modulus(), detail::mul_mod_raw(a.value(), b.value(), m));
}

Residue pow_mod(const Residue& base, std::uint64_t exp) {
  const u128 m = base.modulus().value();
  return Residue(base.modulus(), detail::pow_mod_raw(base.value(), exp, m));
}

Residue neg_mod(const Residue& a) {
  const u128 m = a.modulus().value();
  return Residue(a.modulus(), (m - a.value()) % m);
}

Residue inverse_euclid(const Residue& a, StepCounter* counter) {
  const u128 m = a.modulus().value();
  // Signs of t alternate, so |t - q * new_t| <= M < 2^127 and nothing wraps.
  i128 t = 0;
  i128 new_t = 1;
  u128 r = m;
  u128 new_r = a.value();
  std::uint64_t steps = 0;
  while (new_r != 0) {
    const u128 quotient = r / new_r;
    const i128 next_t = t - static_cast<i128>(quotient) * new_t;
    t = new_t;
    new_t = next_t;
    const u128 next_r = r - quotient * new_r;
    r = new_r;
    new_r = next_r;
    ++steps;
  }
  if (counter != nullptr) counter->steps += steps;
  if (r > 1) throw_not_invertible(a);
  if (t < 0) t += static_cast<i128>(m);
  return Residue(a.modulus(), static_cast<u128>(t));
}

unsigned ct_ladder_steps(const Modulus& m) { return m.bit_width(); }

Residue inverse_ct(const Residue& a, StepCounter* counter) {
  const Modulus& modulus = a.modulus();
  if (!modulus.is_unit(a.value())) throw_not_invertible(a);

  const u128 m = modulus.value();
  const u128 exponent = modulus.phi() - 1;
  const unsigned steps = ct_ladder_steps(modulus);
  u128 result = 1;
  for (unsigned i = steps; i-- > 0;) {
    result = detail::mul_mod_raw(result, result, m);
    const u128 product = detail::mul_mod_raw(result, a.value(), m);
    const u128 take = u128{0} - ((exponent >> i) & 1);
    result = (product & take) | (result & ~take);
  }
  if (counter != nullptr) counter->steps += steps;
  return Residue(modulus, result);
}

}  // namespace cyclemod
