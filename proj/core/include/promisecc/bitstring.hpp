#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace promisecc {

/// Fixed-length binary word. Index 0 holds x_1, the leftmost character of the
/// ASCII form; masks place x_1 in the most significant of the n low bits.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::vector<std::uint8_t> bits);

  static BitString parse(std::string_view text);
  static BitString zeros(std::size_t n);
  static BitString from_mask(std::size_t n, std::uint64_t mask);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  std::span<const std::uint8_t> bits() const { return bits_; }

  int weight() const;
  BitString complement() const;
  /// Copy with position i toggled.
  BitString flipped(std::size_t i) const;
  std::string to_string() const;
  std::uint64_t to_mask() const;

  friend bool operator==(const BitString&, const BitString&) = default;
  friend std::strong_ordering operator<=>(const BitString& a, const BitString& b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  std::vector<std::uint8_t> bits_;
};

struct HammingStats {
  int weight_x = 0;
  int weight_y = 0;
  int distance = 0;
  int and_weight = 0;

  friend bool operator==(const HammingStats&, const HammingStats&) = default;
};

/// Weights, Hamming distance and intersection size |x AND y| of a pair.
/// Throws DimensionError on a length mismatch.
HammingStats hamming_stats(const BitString& x, const BitString& y);

/// ceil(log2(v)) for v >= 1; 0 for v == 1.
int ceil_log2(std::uint64_t v);

}  // namespace promisecc
