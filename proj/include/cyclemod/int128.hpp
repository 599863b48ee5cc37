#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace cyclemod {

__extension__ typedef unsigned __int128 u128;
__extension__ typedef __int128 i128;

inline constexpr u128 kU128Max = ~u128{0};

constexpr std::uint64_t high64(u128 x) { return static_cast<std::uint64_t>(x >> 64); }
constexpr std::uint64_t low64(u128 x) { return static_cast<std::uint64_t>(x); }

// Number of significant bits; bit_length(0) == 0.
constexpr unsigned bit_length(u128 x) {
  unsigned n = 0;
  while (x != 0) {
    ++n;
    x >>= 1;
  }
  return n;
}

// Trailing zero count; undefined for 0 (returns 128).
constexpr unsigned trailing_zeros(u128 x) {
  if (x == 0) return 128;
  unsigned n = 0;
  while ((x & 1) == 0) {
    ++n;
    x >>= 1;
  }
  return n;
}

// Overflow-checked helpers. Return std::nullopt on wrap.
constexpr std::optional<u128> checked_mul(u128 a, u128 b) {
  if (a != 0 && b > kU128Max / a) return std::nullopt;
  return a * b;
}

constexpr std::optional<u128> checked_add(u128 a, u128 b) {
  if (b > kU128Max - a) return std::nullopt;
  return a + b;
}

constexpr bool fits_u64(u128 x) { return high64(x) == 0; }

std::string to_string(u128 value);
std::string to_hex(u128 value, unsigned min_digits = 1);

// Parses an unsigned decimal literal; rejects empty input, signs, and overflow.
std::optional<u128> parse_u128(std::string_view text);

}  // namespace cyclemod
