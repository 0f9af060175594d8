#include "downsets/bounds.hpp"

#include "downsets/errors.hpp"
#include "downsets/facecount.hpp"
#include "downsets/inclusion_exclusion.hpp"

namespace downsets {

UnionBound union_bound_check(const Antichain& facets, const Dyadic& x, const Dyadic& y,
                             const Limits& limits) {
  if (x.is_negative() || y.is_negative()) {
    throw DomainError("union bound needs x, y >= 0, got x=" + x.to_string() + ", y=" + y.to_string());
  }
  const auto n = facets.ground_size();
  UnionBound bound;
  bound.lhs = counts_from_facets(facets, limits).evaluate(x, y);
  const auto sum = x + y;
  for (const auto& f : facets) bound.rhs += pow(sum, f.cardinality()) * pow(y, n - f.cardinality());
  return bound;
}

JointSize joint_size_inequality(const DualPair& pair) {
  return joint_size_sums(pair.facets(), pair.blockers());
}

Dyadic alternating_dyadic_sum(const Antichain& family, const Limits& limits) {
  const auto hist = alternating_size_histogram(family.family(), SubsetFold::kUnion, limits);
  Dyadic sum(0);
  for (std::size_t u = 0; u < hist.size(); ++u) {
    if (hist[u] != 0) sum += Dyadic(hist[u], u);
  }
  return sum;
}

DeviationIdentity deviation_identity(const DualPair& pair, const Limits& limits) {
  return {alternating_dyadic_sum(complement_family(pair.facets()), limits),
          alternating_dyadic_sum(pair.blockers(), limits)};
}

}  // namespace downsets
