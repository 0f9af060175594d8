#include "downsets/facecount.hpp"

#include <algorithm>

#include "downsets/errors.hpp"
#include "downsets/inclusion_exclusion.hpp"

namespace downsets {

FaceCountVector::FaceCountVector(std::size_t n, std::vector<BigInt> counts)
    : n_(n), counts_(std::move(counts)) {
  if (counts_.size() != n_ + 1) {
    throw DomainError("face-count vector over n=" + std::to_string(n_) + " needs " +
                      std::to_string(n_ + 1) + " entries, got " + std::to_string(counts_.size()));
  }
}

BigInt FaceCountVector::total() const {
  BigInt sum = 0;
  for (const auto& a : counts_) sum += a;
  return sum;
}

Dyadic FaceCountVector::evaluate(const Dyadic& x, const Dyadic& y) const {
  Dyadic sum(0);
  for (std::size_t l = 0; l <= n_; ++l) {
    if (counts_[l] == 0) continue;
    sum += Dyadic(counts_[l]) * pow(x, l) * pow(y, n_ - l);
  }
  return sum;
}

bool FaceCountVector::satisfies_invariants() const {
  const auto row = binomial_row(n_);
  bool seen_zero = false;
  for (std::size_t l = 0; l <= n_; ++l) {
    const auto& a = counts_[l];
    if (a < 0 || a > row[l]) return false;
    if (seen_zero && a != 0) return false;
    if (a == 0) seen_zero = true;
  }
  return true;
}

std::string FaceCountVector::to_string() const {
  std::string out = "(";
  for (std::size_t l = 0; l < counts_.size(); ++l) {
    if (l != 0) out += ',';
    out += counts_[l].str();
  }
  return out + ")";
}

FaceCountVector counts_bruteforce(const Antichain& facets, const Limits& limits) {
  const auto n = facets.ground_size();
  std::vector<BigInt> counts(n + 1, 0);
  for (const auto& face : enumerate_downset(facets, limits)) counts[face.cardinality()] += 1;
  return FaceCountVector(n, std::move(counts));
}

FaceCountVector counts_from_facets(const Antichain& facets, const Limits& limits) {
  const auto n = facets.ground_size();
  // hist[k] covers every selection including the empty one, which folds to
  // [n] with sign +1; drop it and flip signs to get (-1)^{|S|+1}.
  auto hist = alternating_size_histogram(facets.family(), SubsetFold::kIntersection, limits);
  hist[n] -= 1;
  std::vector<BigInt> counts(n + 1, 0);
  for (std::size_t k = 0; k <= n; ++k) {
    if (hist[k] == 0) continue;
    const auto row = binomial_row(k);
    for (std::size_t l = 0; l <= k; ++l) counts[l] -= hist[k] * row[l];
  }
  return FaceCountVector(n, std::move(counts));
}

FaceCountVector counts_from_blockers(const Antichain& blockers, const Limits& limits) {
  const auto n = blockers.ground_size();
  const auto hist = alternating_size_histogram(blockers.family(), SubsetFold::kUnion, limits);
  std::vector<BigInt> counts(n + 1, 0);
  for (std::size_t u = 0; u <= n; ++u) {
    if (hist[u] == 0) continue;
    // C(n - u, l - u) for l = u..n
    const auto row = binomial_row(n - u);
    for (std::size_t l = u; l <= n; ++l) counts[l] += hist[u] * row[l - u];
  }
  return FaceCountVector(n, std::move(counts));
}

IntPolynomial f_polynomial(const FaceCountVector& counts) { return IntPolynomial(counts.counts()); }

IntPolynomial k_polynomial_from_counts(const FaceCountVector& counts) {
  // coefficient of t^j: sum_{l <= j} a_l (-1)^{j-l} C(n-l, j-l)
  const auto n = counts.ground_size();
  std::vector<BigInt> k(n + 1, 0);
  for (std::size_t l = 0; l <= n; ++l) {
    const auto& a = counts[l];
    if (a == 0) continue;
    const auto row = binomial_row(n - l);
    for (std::size_t i = 0; i <= n - l; ++i) {
      if (i % 2 == 0) {
        k[l + i] += a * row[i];
      } else {
        k[l + i] -= a * row[i];
      }
    }
  }
  return IntPolynomial(std::move(k));
}

IntPolynomial k_polynomial_from_blockers(const Antichain& blockers, const Limits& limits) {
  return IntPolynomial(alternating_size_histogram(blockers.family(), SubsetFold::kUnion, limits));
}

BigInt hilbert_dimension(const Antichain& blockers, std::size_t degree, const Limits& limits) {
  const auto n = blockers.ground_size();
  const auto k = k_polynomial_from_blockers(blockers, limits);
  if (n == 0) return k.coefficient(degree);
  // 1 / (1 - t)^n = sum_d C(d + n - 1, n - 1) t^d
  BigInt sum = 0;
  const auto top = std::min<long long>(static_cast<long long>(degree), k.degree());
  for (long long j = 0; j <= top; ++j) {
    const auto& kj = k.coefficients()[static_cast<std::size_t>(j)];
    if (kj == 0) continue;
    sum += kj * binomial(static_cast<long long>(degree) - j + static_cast<long long>(n) - 1,
                         static_cast<long long>(n) - 1);
  }
  return sum;
}

BigInt euler_bruteforce(const FaceCountVector& counts) {
  BigInt sum = 0;
  for (std::size_t l = 0; l <= counts.ground_size(); ++l) {
    if (l % 2 == 0) {
      sum += counts[l];
    } else {
      sum -= counts[l];
    }
  }
  return sum;
}

BigInt euler_from_blockers(const Antichain& blockers, const Limits& limits) {
  const auto n = blockers.ground_size();
  const auto hist = alternating_size_histogram(blockers.family(), SubsetFold::kUnion, limits);
  return n % 2 == 0 ? hist[n] : BigInt(-hist[n]);
}

BigInt euler_from_facets(const Antichain& facets, const Limits& limits) {
  const auto n = facets.ground_size();
  auto hist = alternating_size_histogram(facets.family(), SubsetFold::kIntersection, limits);
  // Remove the empty selection when it also folds to the empty set (n = 0).
  if (n == 0) hist[0] -= 1;
  return -hist[0];
}

}  // namespace downsets
