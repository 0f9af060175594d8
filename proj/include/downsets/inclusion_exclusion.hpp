#pragma once

// Signed subset sums over a set family, bucketed by the size of the
// intersection or union of the chosen members. Both count formulas, the
// K-polynomial from blockers, the Euler routes and the dyadic identity are
// read off these histograms.

#include <cstddef>
#include <vector>

#include "downsets/bigint.hpp"
#include "downsets/limits.hpp"
#include "downsets/setfam.hpp"

namespace downsets {

enum class SubsetFold { kIntersection, kUnion };

/// h[k] = sum over all sub-selections S of `family` of (-1)^{|S|}, restricted
/// to those S whose folded set has cardinality k. The empty selection folds
/// to [n] under intersection and to the empty set under union.
///
/// Families with at most kDirectEnumerationMaxSets members (and 2^m within
/// limits.term_cap) are enumerated directly, split over limits.threads.
/// Larger ones are aggregated set by set into a mask -> multiplicity table;
/// the table may hold at most limits.term_cap entries, else
/// TermBudgetExceeded.
std::vector<BigInt> alternating_size_histogram(const SetFamily& family, SubsetFold fold,
                                               const Limits& limits = {});

}  // namespace downsets
