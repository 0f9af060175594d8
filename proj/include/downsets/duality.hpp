#pragma once

// Alexander duality and monotone dualization: complemented families, minimal
// transversals (facets <-> blockers), the dual-pair decision procedure and
// the coefficientwise check of H_D(x, y) + H_{D*}(y, x) = (x + y)^n.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "downsets/bigint.hpp"
#include "downsets/dyadic.hpp"
#include "downsets/facecount.hpp"
#include "downsets/limits.hpp"
#include "downsets/setfam.hpp"

namespace downsets {

/// Each member replaced by its complement in [n].
Antichain complement_family(const Antichain& family);

/// Inclusion-minimal sets meeting every member, by Berge multiplication:
/// members are folded in increasing canonical order and the partial
/// transversal family is re-minimized after every fold. A hypergraph with no
/// members yields {{}}; one containing the empty set yields {}.
/// Throws TermBudgetExceeded if a partial family outgrows limits.term_cap.
Antichain min_transversals(const Antichain& hypergraph, const Limits& limits = {});

Antichain blockers_from_facets(const Antichain& facets, const Limits& limits = {});
Antichain facets_from_blockers(const Antichain& blockers, const Limits& limits = {});

/// Sum of 2^-|M*| over complemented facets and of 2^-|M| over blockers.
struct JointSize {
  Dyadic complemented_facets_sum;
  Dyadic blockers_sum;
  Dyadic total() const { return complemented_facets_sum + blockers_sum; }
  bool at_least_one() const { return total() >= Dyadic(1); }
};

JointSize joint_size_sums(const Antichain& facets, const Antichain& blockers);

struct DualityVerdict {
  enum class Reason {
    kDual,
    kJointSizeBelowOne,  // the 2^-|.| sums total less than 1
    kBlockerInsideFacet,
    kTransversalMismatch,
  };

  bool dual = false;
  Reason reason = Reason::kDual;
  /// Always filled; the filter's evidence when reason is kJointSizeBelowOne.
  JointSize joint_size;
  /// (blocker, facet) with blocker inside facet.
  std::optional<std::pair<Face, Face>> offending_pair;
  /// A face classified differently by the two families. Present whenever
  /// `dual` is false, except when the filter fired and the follow-up search
  /// ran out of budget.
  std::optional<Face> witness;
};

std::string to_string(DualityVerdict::Reason reason);

/// Decides whether `facets` and `blockers` describe the same down-set.
/// Steps: the joint-size filter, a local containment scan, then a full
/// blockers_from_facets comparison. Throws GroundSizeMismatch, and
/// TermBudgetExceeded from the last step only.
DualityVerdict is_dual_pair(const Antichain& facets, const Antichain& blockers,
                            const Limits& limits = {});

/// Facets and blockers of one down-set over an explicit [n].
class DualPair {
 public:
  /// Verifies the pair with is_dual_pair; throws InvalidDualPair otherwise.
  DualPair(Antichain facets, Antichain blockers, const Limits& limits = {});

  static DualPair from_facets(Antichain facets, const Limits& limits = {});
  static DualPair from_blockers(Antichain blockers, const Limits& limits = {});

  std::size_t ground_size() const noexcept { return facets_.ground_size(); }
  const Antichain& facets() const noexcept { return facets_; }
  const Antichain& blockers() const noexcept { return blockers_; }

  friend bool operator==(const DualPair&, const DualPair&) = default;

 private:
  struct Trusted {};
  DualPair(Trusted, Antichain facets, Antichain blockers)
      : facets_(std::move(facets)), blockers_(std::move(blockers)) {}

  friend DualPair alexander_dual(const DualPair& pair);

  Antichain facets_;
  Antichain blockers_;
};

/// Facets* = complemented blockers, blockers* = complemented facets.
DualPair alexander_dual(const DualPair& pair);

struct Prop2Report {
  FaceCountVector counts;       // a_l(D)
  FaceCountVector dual_counts;  // a_l(D*)
  std::vector<BigInt> binomials;
  bool holds = false;
};

/// a_l(D) + a_{n-l}(D*) == C(n, l) for every l, both vectors taken from the
/// facet formula.
Prop2Report check_prop2(const DualPair& pair, const Limits& limits = {});

}  // namespace downsets
