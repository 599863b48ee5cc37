#pragma once

// Hybrid seeds: a d_k residue combined with auxiliary entropy, either by XOR
// masking (H = d XOR r) or through a caller-supplied conditioner applied to
// encode(d) || r. No cryptographic primitive lives here; the conditioner is an
// injection point for a real KDF.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cyclemod/int128.hpp"
#include "cyclemod/modring.hpp"

namespace cyclemod {

// Fixed-width bit string, most-significant bit first. Stored big-endian in
// ceil(width / 8) bytes with the unused high bits of the first byte zero.
class BitString {
 public:
  BitString() = default;
  explicit BitString(unsigned width);

  // Throws WidthMismatch if `value` needs more than `width` bits.
  static BitString from_value(u128 value, unsigned width);
  // Accepts upper or lower case hex digits. Throws WidthMismatch if the value
  // needs more than `width` bits, std::invalid_argument on bad digits.
  static BitString from_hex(std::string_view hex, unsigned width);
  // width = 8 * bytes.size()
  static BitString from_bytes(std::span<const std::uint8_t> bytes);

  unsigned width() const { return width_; }
  const std::vector<std::uint8_t>& bytes() const { return bytes_; }

  bool bit(unsigned i) const;  // i = 0 is the most significant bit
  void set_bit(unsigned i, bool value);

  // Numeric value; std::nullopt when wider than 128 significant bits.
  std::optional<u128> value() const;

  // ceil(width / 4) lowercase hex digits.
  std::string to_hex() const;

  friend bool operator==(const BitString&, const BitString&) = default;
  // Throws WidthMismatch on unequal widths.
  friend BitString operator^(const BitString& a, const BitString& b);

 private:
  unsigned width_ = 0;
  std::vector<std::uint8_t> bytes_;
};

BitString concat(const BitString& hi, const BitString& lo);

// bits(d.value) at the modulus bit width.
BitString encode(const Residue& d);

struct EntropyToken {
  BitString bits;
  std::string source_id;

  unsigned width() const { return bits.width(); }
};

enum class HybridMethod { xor_mask, conditioner };

struct HybridSeed {
  BitString h;
  std::optional<std::uint64_t> k;
  unsigned p;
  HybridMethod method;
};

using Conditioner = std::function<BitString(const BitString&)>;

// Returns its input; stands in for a KDF in tests and the CLI.
BitString identity_conditioner(const BitString& input);

// h = bits(d) XOR r, zero-padded to r.width. Throws WidthMismatch when
// r.width < bit width of M.
HybridSeed mask_xor(const Residue& d, const EntropyToken& r, std::optional<std::uint64_t> k = {});

// h = conditioner(encode(d) || r.bits). Conditioner errors propagate.
HybridSeed mask_conditioned(const Residue& d, const EntropyToken& r, const Conditioner& conditioner,
                            std::optional<std::uint64_t> k = {});

// Inverse of mask_xor. Throws WidthMismatch on width disagreement, OutOfRange
// when the recovered value is not a residue of `m`.
BitString unmask(const HybridSeed& seed, const EntropyToken& r);
Residue unmask_residue(const HybridSeed& seed, const EntropyToken& r, const Modulus& m);

// Exclusive-access token stream. Not copyable; hand it off by moving.
class EntropySource {
 public:
  virtual ~EntropySource() = default;
  EntropySource() = default;
  EntropySource(const EntropySource&) = delete;
  EntropySource& operator=(const EntropySource&) = delete;

  virtual EntropyToken next() = 0;
  virtual unsigned width() const = 0;
};

// Reproducible counter-mode stream: token i is built from SplitMix64 outputs
// keyed on (seed, i). For tests only.
class DeterministicTestSource final : public EntropySource {
 public:
  DeterministicTestSource(std::uint64_t seed, unsigned width);
  EntropyToken next() override;
  unsigned width() const override { return width_; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
  unsigned width_;
};

// Platform randomness via std::random_device. Throws SourceUnavailable if the
// device cannot be opened.
class OsEntropySource final : public EntropySource {
 public:
  explicit OsEntropySource(unsigned width);
  EntropyToken next() override;
  unsigned width() const override { return width_; }

 private:
  std::unique_ptr<std::random_device> device_;
  unsigned width_;
};

}  // namespace cyclemod
