#pragma once

// Face-count vectors and the polynomial invariants derived from them:
// H(x, y) = sum_l a_l x^l y^{n-l}, f(t) = H(t, 1), K(t) = H(t, 1 - t),
// Hilbert-function values of the Stanley-Reisner quotient and the reduced
// Euler characteristic f(-1).

#include <cstddef>
#include <string>
#include <vector>

#include "downsets/bigint.hpp"
#include "downsets/dyadic.hpp"
#include "downsets/limits.hpp"
#include "downsets/polynomial.hpp"
#include "downsets/setfam.hpp"

namespace downsets {

/// a_0, ..., a_n with a_l the number of l-element faces. Encodes the
/// homogeneous degree-n generating function H losslessly.
class FaceCountVector {
 public:
  FaceCountVector() : counts_(1, 0) {}
  /// All-zero vector (the void complex) over [n].
  explicit FaceCountVector(std::size_t n) : n_(n), counts_(n + 1, 0) {}
  /// Throws DomainError unless counts.size() == n + 1.
  FaceCountVector(std::size_t n, std::vector<BigInt> counts);

  std::size_t ground_size() const noexcept { return n_; }
  const std::vector<BigInt>& counts() const noexcept { return counts_; }
  const BigInt& operator[](std::size_t l) const { return counts_.at(l); }

  /// |Delta| = f(1).
  BigInt total() const;
  /// H(x, y).
  Dyadic evaluate(const Dyadic& x, const Dyadic& y) const;

  /// 0 <= a_l <= C(n, l), and a zero entry is followed only by zeros.
  bool satisfies_invariants() const;

  /// "(1,4,4,1,0)"
  std::string to_string() const;

  friend bool operator==(const FaceCountVector&, const FaceCountVector&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<BigInt> counts_;
};

/// Counts faces of the materialized down-set. Throws GroundSetTooLarge above
/// limits.oracle_n_max.
FaceCountVector counts_bruteforce(const Antichain& facets, const Limits& limits = {});

/// a_l = sum_{nonempty S of facets} (-1)^{|S|+1} C(|cap S|, l).
FaceCountVector counts_from_facets(const Antichain& facets, const Limits& limits = {});

/// a_l = sum_{T of blockers} (-1)^{|T|} C(n - |cup T|, l - |cup T|).
FaceCountVector counts_from_blockers(const Antichain& blockers, const Limits& limits = {});

IntPolynomial f_polynomial(const FaceCountVector& counts);

/// sum_l a_l t^l (1 - t)^{n-l}, expanded.
IntPolynomial k_polynomial_from_counts(const FaceCountVector& counts);

/// sum_{T of blockers} (-1)^{|T|} t^{|cup T|}.
IntPolynomial k_polynomial_from_blockers(const Antichain& blockers, const Limits& limits = {});

/// Coefficient of t^d in K(t) / (1 - t)^n: the number of degree-d monomials
/// in n variables divisible by no blocker monomial.
BigInt hilbert_dimension(const Antichain& blockers, std::size_t degree, const Limits& limits = {});

/// f(-1) = sum_l (-1)^l a_l, with the empty face counting +1.
BigInt euler_bruteforce(const FaceCountVector& counts);

/// (-1)^n sum over blocker selections T covering [n] of (-1)^{|T|}.
BigInt euler_from_blockers(const Antichain& blockers, const Limits& limits = {});

/// sum over nonempty facet selections S with empty intersection of (-1)^{|S|+1}.
BigInt euler_from_facets(const Antichain& facets, const Limits& limits = {});

}  // namespace downsets
