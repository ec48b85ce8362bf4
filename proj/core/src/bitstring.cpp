#include "promisecc/bitstring.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "promisecc/errors.hpp"

namespace promisecc {

BitString::BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw InputError("bitstring must have positive length");
  for (auto b : bits_) {
    if (b > 1) throw InputError("bitstring elements must be 0 or 1");
  }
}

BitString BitString::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw InputError("malformed bitstring '" + std::string(text) + "': only '0' and '1' allowed");
    }
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return BitString(std::move(bits));
}

BitString BitString::zeros(std::size_t n) { return BitString(std::vector<std::uint8_t>(n, 0)); }

BitString BitString::from_mask(std::size_t n, std::uint64_t mask) {
  if (n == 0 || n > 64) throw ParameterError("mask conversion needs 1 <= n <= 64");
  std::vector<std::uint8_t> bits(n);
  for (std::size_t i = 0; i < n; ++i) bits[i] = static_cast<std::uint8_t>((mask >> (n - 1 - i)) & 1U);
  return BitString(std::move(bits));
}

int BitString::weight() const { return static_cast<int>(std::count(bits_.begin(), bits_.end(), 1)); }

BitString BitString::complement() const {
  BitString out = *this;
  for (auto& b : out.bits_) b ^= 1U;
  return out;
}

BitString BitString::flipped(std::size_t i) const {
  BitString out = *this;
  out.bits_.at(i) ^= 1U;
  return out;
}

std::string BitString::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) s[i] = static_cast<char>('0' + bits_[i]);
  return s;
}

std::uint64_t BitString::to_mask() const {
  if (bits_.size() > 64) throw ParameterError("mask conversion needs n <= 64");
  std::uint64_t mask = 0;
  for (auto b : bits_) mask = (mask << 1) | b;
  return mask;
}

HammingStats hamming_stats(const BitString& x, const BitString& y) {
  if (x.size() != y.size()) {
    throw DimensionError("bitstring length mismatch: " + std::to_string(x.size()) + " vs " +
                         std::to_string(y.size()));
  }
  HammingStats s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    s.weight_x += x[i];
    s.weight_y += y[i];
    s.distance += x[i] ^ y[i];
    s.and_weight += x[i] & y[i];
  }
  return s;
}

int ceil_log2(std::uint64_t v) {
  if (v <= 1) return 0;
  return std::bit_width(v - 1);
}

}  // namespace promisecc
