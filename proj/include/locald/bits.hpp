#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace locald {

/// A binary string stored as characters '0' and '1'.
using Bits = std::string;

/// Per-node certificates, indexed like the nodes of the configuration.
using CertificateVector = std::vector<Bits>;

bool is_bit_string(std::string_view s) noexcept;

/// ceil(log2(n)); 0 for n <= 1.
int ceil_log2(std::uint64_t n) noexcept;

/// Number of bits in the minimal binary representation (0 for 0).
int bit_width(std::uint64_t value) noexcept;

/// Fixed-width big-endian binary.
Bits to_binary(std::uint64_t value, int width);

/// Minimal binary representation; "0" for zero.
Bits to_binary(std::uint64_t value);

/// Parses a non-empty bit string (leading zeros allowed, at most 63 bits).
std::optional<std::uint64_t> parse_binary(std::string_view bits) noexcept;

/// Certificate size: the maximum per-node bit length.
std::size_t cert_size(const CertificateVector& certs) noexcept;

/// "len:hex" with the bits left-aligned in the hex digits, so the exact
/// bit length survives the round trip.
std::string to_hex(std::string_view bits);
std::optional<Bits> from_hex(std::string_view text);

class BitWriter {
 public:
  void put(bool bit) { out_.push_back(bit ? '1' : '0'); }
  void put_bits(std::string_view bits) { out_.append(bits); }
  void put_uint(std::uint64_t value, int width) { out_ += to_binary(value, width); }

  /// Self-delimiting length: k ones, a zero, then the value in k bits,
  /// where k is the bit width of the value.
  void put_length(std::uint64_t value);

  const Bits& bits() const noexcept { return out_; }
  Bits take() noexcept { return std::move(out_); }

 private:
  Bits out_;
};

class BitReader {
 public:
  explicit BitReader(std::string_view bits) noexcept : in_(bits) {}

  std::optional<bool> get() noexcept;
  std::optional<std::uint64_t> get_uint(int width) noexcept;
  std::optional<std::uint64_t> get_length() noexcept;
  std::optional<std::string_view> get_bits(std::size_t count) noexcept;

  std::size_t remaining() const noexcept { return in_.size() - pos_; }
  bool at_end() const noexcept { return pos_ == in_.size(); }

 private:
  std::string_view in_;
  std::size_t pos_ = 0;
};

/// Bit count that BitWriter::put_length spends on `value`.
std::size_t length_prefix_size(std::uint64_t value) noexcept;

}  // namespace locald
