#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace promisecc {

/// Exact non-negative-denominator fraction used for promise parameters such
/// as the disjointness gap lambda. Always stored in lowest terms.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  /// Parses "p/q" or an integer literal "p". Floats are rejected.
  static Rational parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

  Rational operator*(std::int64_t k) const { return Rational(num_ * k, den_); }
  friend Rational operator-(std::int64_t a, const Rational& r) {
    return Rational(a * r.den_ - r.num_, r.den_);
  }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    // Denominators are positive, so cross-multiplication preserves order.
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, std::int64_t b) {
    return a.num_ <=> b * a.den_;
  }
  friend bool operator==(const Rational& a, std::int64_t b) { return a.num_ == b * a.den_; }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace promisecc
