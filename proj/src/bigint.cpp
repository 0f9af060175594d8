#include "downsets/bigint.hpp"

namespace downsets {

BigInt binomial(long long a, long long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  BigInt result = 1;
  for (long long i = 1; i <= b; ++i) {
    result *= a - b + i;
    result /= i;
  }
  return result;
}

std::vector<BigInt> binomial_row(std::size_t a) {
  std::vector<BigInt> row(a + 1);
  row[0] = 1;
  for (std::size_t k = 0; k < a; ++k) row[k + 1] = row[k] * (a - k) / (k + 1);
  return row;
}

}  // namespace downsets
