#include "cyclemod/hybrid.hpp"

#include <stdexcept>
#include <utility>

#include "cyclemod/errors.hpp"

namespace cyclemod {

namespace {

unsigned byte_count(unsigned width) { return (width + 7) / 8; }

// Offset of bit 0 (the MSB) within the big-endian byte array.
unsigned pad_bits(unsigned width) { return byte_count(width) * 8 - width; }

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

template <typename NextWord>
BitString fill_bits(unsigned width, NextWord next_word) {
  BitString out(width);
  std::uint64_t word = 0;
  for (unsigned i = 0; i < width; ++i) {
    if (i % 64 == 0) word = next_word();
    out.set_bit(i, (word >> (63 - i % 64)) & 1);
  }
  return out;
}

}  // namespace

BitString::BitString(unsigned width) : width_(width), bytes_(byte_count(width), 0) {}

BitString BitString::from_value(u128 value, unsigned width) {
  if (bit_length(value) > width) {
    throw WidthMismatch("value needs " + std::to_string(bit_length(value)) + " bits, width is " +
                        std::to_string(width));
  }
  BitString out(width);
  for (std::size_t i = out.bytes_.size(); i-- > 0;) {
    out.bytes_[i] = static_cast<std::uint8_t>(value & 0xff);
    value >>= 8;
  }
  return out;
}

BitString BitString::from_hex(std::string_view hex, unsigned width) {
  if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
  if (hex.empty()) throw std::invalid_argument("empty hex string");
  // Leading zeros never count against the width.
  while (hex.size() > 1 && hex.front() == '0') hex.remove_prefix(1);

  BitString out(width);
  unsigned bit_index = 0;  // counted from the least significant end
  for (std::size_t i = hex.size(); i-- > 0;) {
    const int digit = hex_digit(hex[i]);
    if (digit < 0) throw std::invalid_argument("invalid hex digit '" + std::string(1, hex[i]) + "'");
    for (int b = 0; b < 4; ++b, ++bit_index) {
      if (((digit >> b) & 1) == 0) continue;
      if (bit_index >= width) {
        throw WidthMismatch("hex value does not fit in " + std::to_string(width) + " bits");
      }
      out.set_bit(width - 1 - bit_index, true);
    }
  }
  return out;
}

BitString BitString::from_bytes(std::span<const std::uint8_t> bytes) {
  BitString out(static_cast<unsigned>(bytes.size() * 8));
  std::copy(bytes.begin(), bytes.end(), out.bytes_.begin());
  return out;
}

bool BitString::bit(unsigned i) const {
  const unsigned pos = i + pad_bits(width_);
  return (bytes_[pos / 8] >> (7 - pos % 8)) & 1;
}

void BitString::set_bit(unsigned i, bool value) {
  const unsigned pos = i + pad_bits(width_);
  const auto mask = static_cast<std::uint8_t>(1u << (7 - pos % 8));
  if (value) {
    bytes_[pos / 8] |= mask;
  } else {
    bytes_[pos / 8] &= static_cast<std::uint8_t>(~mask);
  }
}

std::optional<u128> BitString::value() const {
  u128 v = 0;
  for (std::uint8_t byte : bytes_) {
    if (high64(v) >> 56 != 0) return std::nullopt;
    v = (v << 8) | byte;
  }
  return v;
}

std::string BitString::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const unsigned digits = (width_ + 3) / 4;
  std::string out(digits, '0');
  // Nibble j counts from the least significant end.
  for (unsigned j = 0; j < digits; ++j) {
    unsigned nibble = 0;
    for (unsigned b = 0; b < 4; ++b) {
      const unsigned from_lsb = 4 * j + b;
      if (from_lsb < width_ && bit(width_ - 1 - from_lsb)) nibble |= 1u << b;
    }
    out[digits - 1 - j] = kDigits[nibble];
  }
  return out;
}

BitString operator^(const BitString& a, const BitString& b) {
  if (a.width() != b.width()) {
    throw WidthMismatch("xor of " + std::to_string(a.width()) + "-bit and " +
                        std::to_string(b.width()) + "-bit strings");
  }
  BitString out(a);
  for (std::size_t i = 0; i < out.bytes_.size(); ++i) out.bytes_[i] ^= b.bytes_[i];
  return out;
}

BitString concat(const BitString& hi, const BitString& lo) {
  BitString out(hi.width() + lo.width());
  for (unsigned i = 0; i < hi.width(); ++i) out.set_bit(i, hi.bit(i));
  for (unsigned i = 0; i < lo.width(); ++i) out.set_bit(hi.width() + i, lo.bit(i));
  return out;
}

BitString encode(const Residue& d) { return BitString::from_value(d.value(), d.modulus().bit_width()); }

BitString identity_conditioner(const BitString& input) { return input; }

HybridSeed mask_xor(const Residue& d, const EntropyToken& r, std::optional<std::uint64_t> k) {
  const unsigned need = d.modulus().bit_width();
  if (r.width() < need) {
    throw WidthMismatch("entropy token has " + std::to_string(r.width()) + " bits, residues mod 3^" +
                        std::to_string(d.modulus().p()) + " need " + std::to_string(need));
  }
  return HybridSeed{BitString::from_value(d.value(), r.width()) ^ r.bits, k, d.modulus().p(),
                    HybridMethod::xor_mask};
}

HybridSeed mask_conditioned(const Residue& d, const EntropyToken& r, const Conditioner& conditioner,
                            std::optional<std::uint64_t> k) {
  return HybridSeed{conditioner(concat(encode(d), r.bits)), k, d.modulus().p(),
                    HybridMethod::conditioner};
}

BitString unmask(const HybridSeed& seed, const EntropyToken& r) { return seed.h ^ r.bits; }

Residue unmask_residue(const HybridSeed& seed, const EntropyToken& r, const Modulus& m) {
  const auto v = unmask(seed, r).value();
  if (!v || *v >= m.value()) throw OutOfRange("unmasked value is not a residue mod 3^" + std::to_string(m.p()));
  return Residue(m, *v);
}

DeterministicTestSource::DeterministicTestSource(std::uint64_t seed, unsigned width)
    : seed_(seed), width_(width) {
  if (width == 0) throw OutOfRange("token width must be positive");
}

EntropyToken DeterministicTestSource::next() {
  const std::uint64_t key = splitmix64(seed_) ^ splitmix64(counter_++);
  std::uint64_t block = 0;
  BitString bits = fill_bits(width_, [&] { return splitmix64(key + block++ * 0x632be59bd9b4e019ULL); });
  return EntropyToken{std::move(bits), "test:" + std::to_string(seed_)};
}

OsEntropySource::OsEntropySource(unsigned width) : width_(width) {
  if (width == 0) throw OutOfRange("token width must be positive");
  try {
    device_ = std::make_unique<std::random_device>();
  } catch (const std::exception& e) {
    throw SourceUnavailable(std::string("platform randomness unavailable: ") + e.what());
  }
}

EntropyToken OsEntropySource::next() {
  try {
    BitString bits = fill_bits(width_, [&] {
      return (static_cast<std::uint64_t>((*device_)()) << 32) | (*device_)();
    });
    return EntropyToken{std::move(bits), "os"};
  } catch (const std::exception& e) {
    throw SourceUnavailable(std::string("platform randomness failed: ") + e.what());
  }
}

}  // namespace cyclemod
