#include "downsets/inclusion_exclusion.hpp"

#include <algorithm>
#include <cstdint>
#include <thread>
#include <unordered_map>

#include "downsets/errors.hpp"

namespace downsets {

namespace {

void fold_into(Face& acc, const Face& member, SubsetFold fold) {
  if (fold == SubsetFold::kIntersection) {
    acc &= member;
  } else {
    acc |= member;
  }
}

Face fold_identity(std::size_t n, SubsetFold fold) {
  return fold == SubsetFold::kIntersection ? Face::full(n) : Face(n);
}

// Once the accumulator is absorbing (empty for intersection, [n] for union)
// every extension folds to the same set and the remaining signs cancel.
bool absorbing(const Face& acc, SubsetFold fold, std::size_t n) {
  return fold == SubsetFold::kIntersection ? acc.empty() : acc.cardinality() == n;
}

class DirectEnumerator {
 public:
  DirectEnumerator(const std::vector<Face>& members, SubsetFold fold, std::size_t n)
      : members_(members), fold_(fold), n_(n), scratch_(members.size() + 1, Face(n)) {}

  void run(std::size_t depth, const Face& acc, int sign, std::vector<std::int64_t>& hist) {
    if (depth == members_.size()) {
      hist[acc.cardinality()] += sign;
      return;
    }
    if (absorbing(acc, fold_, n_)) return;
    run(depth + 1, acc, sign, hist);
    Face& next = scratch_[depth];
    next = acc;
    fold_into(next, members_[depth], fold_);
    run(depth + 1, next, -sign, hist);
  }

 private:
  const std::vector<Face>& members_;
  SubsetFold fold_;
  std::size_t n_;
  std::vector<Face> scratch_;
};

std::vector<BigInt> direct_histogram(const SetFamily& family, SubsetFold fold, unsigned threads) {
  const auto n = family.ground_size();
  const auto& members = family.members();
  const auto m = members.size();

  // Selections over the first `prefix` members become independent tasks.
  std::size_t prefix = 0;
  while (prefix < m && (std::size_t{1} << prefix) < 4 * static_cast<std::size_t>(threads)) ++prefix;
  if (threads <= 1) prefix = 0;
  const std::size_t tasks = std::size_t{1} << prefix;
  const std::vector<Face> tail(members.begin() + static_cast<std::ptrdiff_t>(prefix), members.end());
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(std::max(threads, 1U), tasks));

  std::vector<std::vector<std::int64_t>> partial(workers, std::vector<std::int64_t>(n + 1, 0));
  auto work = [&](unsigned id) {
    DirectEnumerator enumerator(tail, fold, n);
    for (std::size_t task = id; task < tasks; task += workers) {
      Face acc = fold_identity(n, fold);
      int sign = 1;
      for (std::size_t j = 0; j < prefix; ++j) {
        if ((task >> j) & 1U) {
          fold_into(acc, members[j], fold);
          sign = -sign;
        }
      }
      enumerator.run(0, acc, sign, partial[id]);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned id = 0; id < workers; ++id) pool.emplace_back(work, id);
  }

  std::vector<BigInt> hist(n + 1, 0);
  for (const auto& p : partial) {
    for (std::size_t k = 0; k <= n; ++k) hist[k] += p[k];
  }
  return hist;
}

std::vector<BigInt> aggregated_histogram(const SetFamily& family, SubsetFold fold, std::size_t cap) {
  const auto n = family.ground_size();
  std::unordered_map<Face, BigInt, FaceHash> table;
  table.emplace(fold_identity(n, fold), 1);
  for (const auto& member : family) {
    auto next = table;
    for (const auto& [mask, multiplicity] : table) {
      Face folded = mask;
      fold_into(folded, member, fold);
      auto [it, inserted] = next.try_emplace(std::move(folded), 0);
      it->second -= multiplicity;
      if (it->second == 0) next.erase(it);
      if (next.size() > cap) {
        throw TermBudgetExceeded("inclusion-exclusion table exceeded " + std::to_string(cap) +
                                 " distinct masks");
      }
    }
    table = std::move(next);
  }
  std::vector<BigInt> hist(n + 1, 0);
  for (const auto& [mask, multiplicity] : table) hist[mask.cardinality()] += multiplicity;
  return hist;
}

}  // namespace

std::vector<BigInt> alternating_size_histogram(const SetFamily& family, SubsetFold fold,
                                               const Limits& limits) {
  const auto m = family.size();
  if (m <= kDirectEnumerationMaxSets && (std::size_t{1} << m) <= limits.term_cap) {
    return direct_histogram(family, fold, limits.threads);
  }
  return aggregated_histogram(family, fold, limits.term_cap);
}

}  // namespace downsets
