#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "downsets/bigint.hpp"
#include "downsets/dyadic.hpp"

namespace downsets {

/// Univariate polynomial with exact integer coefficients, index = degree.
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);

  static IntPolynomial constant(BigInt c);
  /// (a + b t)^k
  static IntPolynomial binomial_power(long long a, long long b, std::size_t k);

  const std::vector<BigInt>& coefficients() const noexcept { return coefficients_; }
  /// -1 for the zero polynomial.
  long long degree() const noexcept { return static_cast<long long>(coefficients_.size()) - 1; }
  bool is_zero() const noexcept { return coefficients_.empty(); }
  BigInt coefficient(std::size_t power) const;

  BigInt evaluate(const BigInt& t) const;
  Dyadic evaluate(const Dyadic& t) const;

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Ascending degree, e.g. "1-2t^2+t^3"; "0" for the zero polynomial.
  std::string to_string(const std::string& variable = "t") const;

 private:
  void trim();

  std::vector<BigInt> coefficients_;
};

}  // namespace downsets
