#pragma once

// The union bound on H, the joint-size inequality for a formula and its
// dual, and the exact identity it approximates, all in dyadic arithmetic.

#include "downsets/duality.hpp"
#include "downsets/dyadic.hpp"
#include "downsets/limits.hpp"
#include "downsets/setfam.hpp"

namespace downsets {

struct UnionBound {
  Dyadic lhs;  // H(x, y)
  Dyadic rhs;  // sum_F (x + y)^{|F|} y^{n - |F|}
  bool holds() const { return lhs <= rhs; }
};

/// Throws DomainError for negative x or y.
UnionBound union_bound_check(const Antichain& facets, const Dyadic& x, const Dyadic& y,
                             const Limits& limits = {});

/// Sums of 2^-|M*| over the dual's blockers and of 2^-|M| over the blockers.
JointSize joint_size_inequality(const DualPair& pair);

struct DeviationIdentity {
  Dyadic dual_sum;     // over selections of the dual's blockers
  Dyadic primal_sum;   // over selections of the blockers
  Dyadic total() const { return dual_sum + primal_sum; }
  bool holds() const { return total() == Dyadic(1); }
};

/// sum_{T} (-1)^{|T|} 2^{-|cup T|} for the blockers and for the dual's blockers.
DeviationIdentity deviation_identity(const DualPair& pair, const Limits& limits = {});

/// sum_{T of family} (-1)^{|T|} 2^{-|cup T|}.
Dyadic alternating_dyadic_sum(const Antichain& family, const Limits& limits = {});

}  // namespace downsets
