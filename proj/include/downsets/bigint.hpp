#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace downsets {

using BigInt = boost::multiprecision::cpp_int;

/// C(a, b) with the convention C(a, b) = 0 whenever b < 0 or b > a (or a < 0).
BigInt binomial(long long a, long long b);

/// Row C(a, 0), ..., C(a, a).
std::vector<BigInt> binomial_row(std::size_t a);

/// Full decimal rendering, never scientific notation.
inline std::string to_decimal(const BigInt& value) { return value.str(); }

}  // namespace downsets
