#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

#include "downsets/bigint.hpp"

namespace downsets {

/// Exact rational numerator / 2^exponent, kept canonical: the numerator is
/// odd, or the exponent is zero.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long long value) : numerator_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Dyadic(BigInt value) : numerator_(std::move(value)) {}
  Dyadic(BigInt numerator, std::size_t exponent);

  /// 2^-k.
  static Dyadic inverse_power_of_two(std::size_t k);
  /// Accepts "a", "a/b" with b a power of two, and "a/2^k". Throws DomainError.
  static Dyadic parse(std::string_view text);

  const BigInt& numerator() const noexcept { return numerator_; }
  std::size_t exponent() const noexcept { return exponent_; }
  bool is_negative() const noexcept { return numerator_ < 0; }

  Dyadic& operator+=(const Dyadic& other);
  Dyadic& operator-=(const Dyadic& other);
  Dyadic& operator*=(const Dyadic& other);
  friend Dyadic operator+(Dyadic a, const Dyadic& b) { return a += b; }
  friend Dyadic operator-(Dyadic a, const Dyadic& b) { return a -= b; }
  friend Dyadic operator*(Dyadic a, const Dyadic& b) { return a *= b; }
  Dyadic operator-() const;

  friend bool operator==(const Dyadic&, const Dyadic&) = default;
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

  /// "5/4", "-3/8", "1", "0".
  std::string to_string() const;

 private:
  void canonicalize();

  BigInt numerator_ = 0;
  std::size_t exponent_ = 0;
};

Dyadic pow(const Dyadic& base, std::size_t exponent);

}  // namespace downsets
