#include "downsets/duality.hpp"

#include <algorithm>

#include "downsets/errors.hpp"

namespace downsets {

namespace {

void require_same_ground(const Antichain& a, const Antichain& b) {
  if (a.ground_size() != b.ground_size()) {
    throw GroundSizeMismatch("families over n=" + std::to_string(a.ground_size()) + " and n=" +
                             std::to_string(b.ground_size()));
  }
}

std::optional<std::pair<Face, Face>> blocker_inside_facet(const Antichain& facets,
                                                          const Antichain& blockers) {
  for (const auto& m : blockers) {
    for (const auto& f : facets) {
      if (m.is_subset_of(f)) return std::pair{m, f};
    }
  }
  return std::nullopt;
}

// Any face on which the two descriptions disagree lies in the symmetric
// difference of the true blockers and the claimed ones.
std::optional<Face> find_witness(const Antichain& facets, const Antichain& blockers,
                                 const Antichain& true_blockers) {
  auto disagrees = [&](const Face& x) {
    return member_by_facets(x, facets) != member_by_blockers(x, blockers);
  };
  for (const auto& b : true_blockers) {
    if (!blockers.contains(b) && disagrees(b)) return b;
  }
  for (const auto& m : blockers) {
    if (!true_blockers.contains(m) && disagrees(m)) return m;
  }
  return std::nullopt;
}

}  // namespace

Antichain complement_family(const Antichain& family) {
  std::vector<Face> complements;
  complements.reserve(family.size());
  for (const auto& f : family) complements.push_back(f.complement());
  std::sort(complements.begin(), complements.end());
  return Antichain(Antichain::Trusted{}, SetFamily(family.ground_size(), std::move(complements)));
}

Antichain min_transversals(const Antichain& hypergraph, const Limits& limits) {
  const auto n = hypergraph.ground_size();
  std::vector<Face> current{Face(n)};
  for (const auto& edge : hypergraph) {
    if (edge.empty()) return Antichain(n);
    const auto vertices = edge.elements();
    std::vector<Face> next;
    for (const auto& t : current) {
      if (t.intersects(edge)) {
        next.push_back(t);
        continue;
      }
      for (auto v : vertices) {
        Face extended = t;
        extended.insert(v);
        next.push_back(std::move(extended));
      }
      if (next.size() > limits.term_cap) {
        throw TermBudgetExceeded("partial transversal family exceeded " +
                                 std::to_string(limits.term_cap) + " sets");
      }
    }
    current = min_antichain(SetFamily(n, std::move(next))).members();
  }
  return min_antichain(SetFamily(n, std::move(current)));
}

Antichain blockers_from_facets(const Antichain& facets, const Limits& limits) {
  // sigma is a non-face iff it meets every [n] \ F.
  return min_transversals(complement_family(facets), limits);
}

Antichain facets_from_blockers(const Antichain& blockers, const Limits& limits) {
  return complement_family(min_transversals(blockers, limits));
}

JointSize joint_size_sums(const Antichain& facets, const Antichain& blockers) {
  require_same_ground(facets, blockers);
  const auto n = facets.ground_size();
  JointSize sums;
  for (const auto& f : facets) sums.complemented_facets_sum += Dyadic::inverse_power_of_two(n - f.cardinality());
  for (const auto& m : blockers) sums.blockers_sum += Dyadic::inverse_power_of_two(m.cardinality());
  return sums;
}

std::string to_string(DualityVerdict::Reason reason) {
  switch (reason) {
    case DualityVerdict::Reason::kDual:
      return "dual";
    case DualityVerdict::Reason::kJointSizeBelowOne:
      return "joint-size-below-one";
    case DualityVerdict::Reason::kBlockerInsideFacet:
      return "blocker-inside-facet";
    case DualityVerdict::Reason::kTransversalMismatch:
      return "transversal-mismatch";
  }
  return "unknown";
}

DualityVerdict is_dual_pair(const Antichain& facets, const Antichain& blockers, const Limits& limits) {
  require_same_ground(facets, blockers);
  DualityVerdict verdict;
  verdict.joint_size = joint_size_sums(facets, blockers);

  if (!verdict.joint_size.at_least_one()) {
    verdict.reason = DualityVerdict::Reason::kJointSizeBelowOne;
    if (auto pair = blocker_inside_facet(facets, blockers)) {
      verdict.witness = pair->first;
      return verdict;
    }
    try {
      verdict.witness = find_witness(facets, blockers, blockers_from_facets(facets, limits));
    } catch (const TermBudgetExceeded&) {
      // The filter alone is a sound refutation.
    }
    return verdict;
  }

  if (auto pair = blocker_inside_facet(facets, blockers)) {
    verdict.reason = DualityVerdict::Reason::kBlockerInsideFacet;
    verdict.witness = pair->first;
    verdict.offending_pair = std::move(pair);
    return verdict;
  }

  const auto true_blockers = blockers_from_facets(facets, limits);
  if (true_blockers == blockers) {
    verdict.dual = true;
    return verdict;
  }
  verdict.reason = DualityVerdict::Reason::kTransversalMismatch;
  verdict.witness = find_witness(facets, blockers, true_blockers);
  return verdict;
}

DualPair::DualPair(Antichain facets, Antichain blockers, const Limits& limits)
    : facets_(std::move(facets)), blockers_(std::move(blockers)) {
  const auto verdict = is_dual_pair(facets_, blockers_, limits);
  if (!verdict.dual) {
    throw InvalidDualPair("facets " + facets_.to_string() + " and blockers " + blockers_.to_string() +
                          " describe different down-sets (" + to_string(verdict.reason) + ")");
  }
}

DualPair DualPair::from_facets(Antichain facets, const Limits& limits) {
  auto blockers = blockers_from_facets(facets, limits);
  return DualPair(Trusted{}, std::move(facets), std::move(blockers));
}

DualPair DualPair::from_blockers(Antichain blockers, const Limits& limits) {
  auto facets = facets_from_blockers(blockers, limits);
  return DualPair(Trusted{}, std::move(facets), std::move(blockers));
}

DualPair alexander_dual(const DualPair& pair) {
  return DualPair(DualPair::Trusted{}, complement_family(pair.blockers()),
                  complement_family(pair.facets()));
}

Prop2Report check_prop2(const DualPair& pair, const Limits& limits) {
  const auto n = pair.ground_size();
  Prop2Report report{counts_from_facets(pair.facets(), limits),
                     counts_from_facets(alexander_dual(pair).facets(), limits), binomial_row(n),
                     true};
  for (std::size_t l = 0; l <= n; ++l) {
    if (report.counts[l] + report.dual_counts[n - l] != report.binomials[l]) report.holds = false;
  }
  return report;
}

}  // namespace downsets
