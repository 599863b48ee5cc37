#include "cyclemod/int128.hpp"

#include <algorithm>

namespace cyclemod {

std::string to_string(u128 value) {
  if (value == 0) return "0";
  std::string digits;
  while (value != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::string to_hex(u128 value, unsigned min_digits) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  while (value != 0) {
    out.push_back(kDigits[static_cast<unsigned>(value & 0xf)]);
    value >>= 4;
  }
  while (out.size() < min_digits) out.push_back('0');
  std::reverse(out.begin(), out.end());
  return out;
}

std::optional<u128> parse_u128(std::string_view text) {
  if (text.empty()) return std::nullopt;
  u128 value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') return std::nullopt;
    auto scaled = checked_mul(value, 10);
    if (!scaled) return std::nullopt;
    auto next = checked_add(*scaled, static_cast<u128>(c - '0'));
    if (!next) return std::nullopt;
    value = *next;
  }
  return value;
}

}  // namespace cyclemod
