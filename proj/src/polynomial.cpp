#include "downsets/polynomial.hpp"

#include <algorithm>

namespace downsets {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients)
    : coefficients_(std::move(coefficients)) {
  trim();
}

IntPolynomial IntPolynomial::constant(BigInt c) { return IntPolynomial({std::move(c)}); }

IntPolynomial IntPolynomial::binomial_power(long long a, long long b, std::size_t k) {
  // sum_j C(k, j) a^{k-j} b^j t^j
  const auto row = binomial_row(k);
  std::vector<BigInt> coefficients(k + 1);
  for (std::size_t j = 0; j <= k; ++j) {
    coefficients[j] = row[j] * boost::multiprecision::pow(BigInt(a), static_cast<unsigned>(k - j)) *
                      boost::multiprecision::pow(BigInt(b), static_cast<unsigned>(j));
  }
  return IntPolynomial(std::move(coefficients));
}

BigInt IntPolynomial::coefficient(std::size_t power) const {
  return power < coefficients_.size() ? coefficients_[power] : BigInt(0);
}

BigInt IntPolynomial::evaluate(const BigInt& t) const {
  BigInt acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Dyadic IntPolynomial::evaluate(const Dyadic& t) const {
  Dyadic acc(0);
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * t + Dyadic(*it);
  }
  return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  if (coefficients_.size() < other.coefficients_.size()) {
    coefficients_.resize(other.coefficients_.size());
  }
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) coefficients_[i] += other.coefficients_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  if (coefficients_.size() < other.coefficients_.size()) {
    coefficients_.resize(other.coefficients_.size());
  }
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) coefficients_[i] -= other.coefficients_[i];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coefficients_.size() + b.coefficients_.size() - 1);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    if (a.coefficients_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
      out[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
  }
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string(const std::string& variable) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t power = 0; power < coefficients_.size(); ++power) {
    const auto& c = coefficients_[power];
    if (c == 0) continue;
    const BigInt magnitude = abs(c);
    if (c < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    if (power == 0 || magnitude != 1) out += magnitude.str();
    if (power >= 1) out += variable;
    if (power >= 2) out += "^" + std::to_string(power);
  }
  return out;
}

void IntPolynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

}  // namespace downsets
