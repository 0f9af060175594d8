#include "downsets/dyadic.hpp"

#include <algorithm>
#include <charconv>

#include "downsets/errors.hpp"

namespace downsets {

namespace {

std::size_t trailing_zero_bits(const BigInt& value) {
  return static_cast<std::size_t>(boost::multiprecision::lsb(abs(value)));
}

BigInt pow2(std::size_t k) { return BigInt(1) << k; }

BigInt parse_integer(std::string_view text, std::string_view whole) {
  if (text.empty()) throw DomainError("malformed dyadic '" + std::string(whole) + "'");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size() ||
      !std::all_of(text.begin() + static_cast<std::ptrdiff_t>(start), text.end(),
                   [](char c) { return c >= '0' && c <= '9'; })) {
    throw DomainError("malformed dyadic '" + std::string(whole) + "'");
  }
  return BigInt(std::string(text[0] == '+' ? text.substr(1) : text));
}

}  // namespace

Dyadic::Dyadic(BigInt numerator, std::size_t exponent)
    : numerator_(std::move(numerator)), exponent_(exponent) {
  canonicalize();
}

Dyadic Dyadic::inverse_power_of_two(std::size_t k) { return Dyadic(BigInt(1), k); }

Dyadic Dyadic::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Dyadic(parse_integer(text, text));
  const auto num = parse_integer(text.substr(0, slash), text);
  const auto den = text.substr(slash + 1);
  if (den.starts_with("2^")) {
    const auto digits = den.substr(2);
    std::size_t k = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
      throw DomainError("malformed dyadic '" + std::string(text) + "'");
    }
    return Dyadic(num, k);
  }
  const auto d = parse_integer(den, text);
  if (d <= 0 || (d & (d - 1)) != 0) {
    throw DomainError("denominator of '" + std::string(text) + "' is not a power of two");
  }
  return Dyadic(num, trailing_zero_bits(d));
}

void Dyadic::canonicalize() {
  if (numerator_ == 0) {
    exponent_ = 0;
    return;
  }
  const auto shift = std::min(exponent_, trailing_zero_bits(numerator_));
  numerator_ /= pow2(shift);  // exact: the low `shift` bits are zero
  exponent_ -= shift;
}

Dyadic& Dyadic::operator+=(const Dyadic& other) {
  const auto e = std::max(exponent_, other.exponent_);
  numerator_ = numerator_ * pow2(e - exponent_) + other.numerator_ * pow2(e - other.exponent_);
  exponent_ = e;
  canonicalize();
  return *this;
}

Dyadic& Dyadic::operator-=(const Dyadic& other) { return *this += -other; }

Dyadic& Dyadic::operator*=(const Dyadic& other) {
  numerator_ *= other.numerator_;
  exponent_ += other.exponent_;
  canonicalize();
  return *this;
}

Dyadic Dyadic::operator-() const {
  Dyadic out = *this;
  out.numerator_ = -out.numerator_;
  return out;
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  const auto e = std::max(a.exponent_, b.exponent_);
  const BigInt lhs = a.numerator_ * pow2(e - a.exponent_);
  const BigInt rhs = b.numerator_ * pow2(e - b.exponent_);
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Dyadic::to_string() const {
  if (exponent_ == 0) return numerator_.str();
  return numerator_.str() + "/" + pow2(exponent_).str();
}

Dyadic pow(const Dyadic& base, std::size_t exponent) {
  Dyadic result(1);
  Dyadic square = base;
  for (; exponent != 0; exponent >>= 1) {
    if (exponent & 1U) result *= square;
    if (exponent > 1) square *= square;
  }
  return result;
}

}  // namespace downsets
