#include "locald/bits.hpp"

#include <algorithm>
#include <bit>

namespace locald {

bool is_bit_string(std::string_view s) noexcept {
  return std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; });
}

int ceil_log2(std::uint64_t n) noexcept {
  if (n <= 1) return 0;
  return static_cast<int>(std::bit_width(n - 1));
}

int bit_width(std::uint64_t value) noexcept { return static_cast<int>(std::bit_width(value)); }

Bits to_binary(std::uint64_t value, int width) {
  Bits out(static_cast<std::size_t>(width), '0');
  for (int i = width - 1; i >= 0 && value != 0; --i, value >>= 1) {
    if (value & 1U) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

Bits to_binary(std::uint64_t value) { return value == 0 ? Bits("0") : to_binary(value, bit_width(value)); }

std::optional<std::uint64_t> parse_binary(std::string_view bits) noexcept {
  if (bits.empty() || bits.size() > 63 || !is_bit_string(bits)) return std::nullopt;
  std::uint64_t value = 0;
  for (char c : bits) value = (value << 1) | static_cast<std::uint64_t>(c == '1');
  return value;
}

std::size_t cert_size(const CertificateVector& certs) noexcept {
  std::size_t size = 0;
  for (const auto& c : certs) size = std::max(size, c.size());
  return size;
}

std::string to_hex(std::string_view bits) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out = std::to_string(bits.size()) + ":";
  for (std::size_t i = 0; i < bits.size(); i += 4) {
    int nibble = 0;
    for (std::size_t j = 0; j < 4; ++j) {
      nibble <<= 1;
      if (i + j < bits.size() && bits[i + j] == '1') nibble |= 1;
    }
    out.push_back(digits[nibble]);
  }
  return out;
}

std::optional<Bits> from_hex(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos || colon == 0) return std::nullopt;
  std::size_t length = 0;
  for (char c : text.substr(0, colon)) {
    if (c < '0' || c > '9') return std::nullopt;
    length = length * 10 + static_cast<std::size_t>(c - '0');
  }
  const auto hex = text.substr(colon + 1);
  if (hex.size() != (length + 3) / 4) return std::nullopt;
  Bits out;
  for (char c : hex) {
    int nibble;
    if (c >= '0' && c <= '9') nibble = c - '0';
    else if (c >= 'a' && c <= 'f') nibble = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') nibble = c - 'A' + 10;
    else return std::nullopt;
    out += to_binary(static_cast<std::uint64_t>(nibble), 4);
  }
  if (std::any_of(out.begin() + static_cast<std::ptrdiff_t>(length), out.end(), [](char c) { return c != '0'; }))
    return std::nullopt;
  out.resize(length);
  return out;
}

void BitWriter::put_length(std::uint64_t value) {
  const int k = bit_width(value);
  out_.append(static_cast<std::size_t>(k), '1');
  out_.push_back('0');
  if (k > 0) put_uint(value, k);
}

std::size_t length_prefix_size(std::uint64_t value) noexcept {
  return 2 * static_cast<std::size_t>(bit_width(value)) + 1;
}

std::optional<bool> BitReader::get() noexcept {
  if (pos_ >= in_.size()) return std::nullopt;
  return in_[pos_++] == '1';
}

std::optional<std::uint64_t> BitReader::get_uint(int width) noexcept {
  if (width < 0 || width > 63 || remaining() < static_cast<std::size_t>(width)) return std::nullopt;
  std::uint64_t value = 0;
  for (int i = 0; i < width; ++i) value = (value << 1) | static_cast<std::uint64_t>(in_[pos_++] == '1');
  return value;
}

std::optional<std::uint64_t> BitReader::get_length() noexcept {
  int k = 0;
  while (true) {
    auto bit = get();
    if (!bit) return std::nullopt;
    if (!*bit) break;
    if (++k > 63) return std::nullopt;
  }
  if (k == 0) return 0;
  auto value = get_uint(k);
  // the leading bit of a k-bit width value is always set
  if (!value || bit_width(*value) != k) return std::nullopt;
  return value;
}

std::optional<std::string_view> BitReader::get_bits(std::size_t count) noexcept {
  if (remaining() < count) return std::nullopt;
  auto out = in_.substr(pos_, count);
  pos_ += count;
  return out;
}

}  // namespace locald
