// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "downsets/bounds.hpp"
#include "downsets/duality.hpp"
#include "downsets/facecount.hpp"
#include "oracles.hpp"

using namespace downsets;
using downsets::testing::antichain;

namespace {

class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 5) messages_ << "    failed: " << what << '\n';
  }

  bool passed() const { return failures_ == 0; }
  std::size_t checks() const { return checks_; }
  std::size_t failures() const { return failures_; }
  std::string messages() const { return messages_.str(); }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::ostringstream messages_;
};

struct Criterion {
  std::string id;
  std::string title;
  double time_limit_seconds;  // 0 = none
  std::function<void(Checker&)> body;
};

Dyadic q(long long num, std::size_t exponent) { return Dyadic(BigInt(num), exponent); }

FaceCountVector fcv(std::size_t n, std::vector<long long> values) {
  return FaceCountVector(n, std::vector<BigInt>(values.begin(), values.end()));
}

std::vector<Antichain> random_corpus() {
  std::mt19937_64 rng(20240601);
  std::vector<Antichain> corpus;
  corpus.reserve(500);
  for (int i = 0; i < 500; ++i) corpus.push_back(testing::random_facets(rng, 12, 10));
  return corpus;
}

const std::vector<Antichain>& corpus() {
  static const auto instance = random_corpus();
  return instance;
}

std::string label(const Antichain& a) { return "n=" + std::to_string(a.ground_size()) + " " + a.to_string(); }

void worked_example(Checker& c) {
  const auto facets = antichain(4, {{1, 2}, {2, 3, 4}});
  const auto expected_counts = fcv(4, {1, 4, 4, 1, 0});
  c.expect(counts_bruteforce(facets) == expected_counts, "brute-force counts (1,4,4,1,0)");
  c.expect(counts_from_facets(facets) == expected_counts, "facet formula counts (1,4,4,1,0)");

  const auto blockers = blockers_from_facets(facets);
  c.expect(blockers == antichain(4, {{1, 3}, {1, 4}}), "blockers {13,14}");
  c.expect(counts_from_blockers(blockers) == expected_counts, "blocker formula counts (1,4,4,1,0)");

  const IntPolynomial k({1, 0, -2, 1});
  c.expect(k_polynomial_from_blockers(blockers) == k, "K from blockers = 1-2t^2+t^3");
  c.expect(k_polynomial_from_counts(expected_counts) == k, "K from counts = 1-2t^2+t^3");

  c.expect(euler_bruteforce(counts_bruteforce(facets)) == 0, "euler brute = 0");
  c.expect(euler_from_facets(facets) == 0, "euler facets = 0");
  c.expect(euler_from_blockers(blockers) == 0, "euler blockers = 0");

  const DualPair pair(facets, blockers);
  const auto dual = alexander_dual(pair);
  c.expect(dual.facets() == antichain(4, {{2, 3}, {2, 4}}), "dual facets {23,24}");
  c.expect(dual.blockers() == antichain(4, {{1}, {3, 4}}), "dual blockers {1,34}");

  const auto prop2 = check_prop2(pair);
  c.expect(prop2.holds, "complement coefficients");
  c.expect(prop2.dual_counts == fcv(4, {1, 3, 2, 0, 0}), "dual counts (1,3,2,0,0)");

  const auto sums = joint_size_inequality(pair);
  c.expect(sums.complemented_facets_sum == q(3, 2), "inequality M* sum = 3/4");
  c.expect(sums.blockers_sum == q(1, 1), "inequality M sum = 1/2");
  c.expect(sums.total() == q(5, 2), "inequality total = 5/4");

  const auto deviation = deviation_identity(pair);
  c.expect(deviation.primal_sum == q(5, 3), "deviation M part = 5/8");
  c.expect(deviation.dual_sum == q(3, 3), "deviation M* part = 3/8");
  c.expect(deviation.total() == Dyadic(1), "deviation total = 1");
}

void face_counts(Checker& c) {
  for (const auto& facets : corpus()) {
    const auto brute = counts_bruteforce(facets);
    c.expect(counts_from_facets(facets) == brute, "facet formula " + label(facets));
    c.expect(counts_from_blockers(blockers_from_facets(facets)) == brute, "blocker formula " + label(facets));
  }
}

void k_polynomial(Checker& c) {
  for (const auto& facets : corpus()) {
    const auto from_counts = k_polynomial_from_counts(counts_bruteforce(facets));
    c.expect(k_polynomial_from_blockers(blockers_from_facets(facets)) == from_counts, "K routes " + label(facets));
  }
}

void complement_coefficients(Checker& c) {
  for (const auto& facets : corpus()) {
    const auto pair = DualPair::from_facets(facets);
    const auto n = facets.ground_size();
    // Both sides from enumeration, independent of the facet formula inside check_prop2.
    const auto a = counts_bruteforce(pair.facets());
    const auto a_star = counts_bruteforce(alexander_dual(pair).facets());
    const auto row = binomial_row(n);
    bool holds = true;
    for (std::size_t l = 0; l <= n; ++l) holds = holds && a[l] + a_star[n - l] == row[l];
    c.expect(holds, "enumerated coefficients " + label(facets));
    c.expect(check_prop2(pair).holds, "check_prop2 " + label(facets));
  }
}

void dualization(Checker& c) {
  auto check = [&](const Antichain& h) {
    const auto tr = min_transversals(h);
    c.expect(tr == testing::brute_min_transversals(h), "Tr vs brute force " + label(h));
    c.expect(min_transversals(tr) == h, "Tr(Tr(H)) = H " + label(h));
  };
  // Every labeled antichain up to n = 5; n = 6 up to isomorphism.
  for (std::size_t n = 0; n <= 5; ++n) {
    for (auto table : testing::all_downset_tables(n)) {
      check(testing::antichain_from_masks(n, testing::maximal_elements(n, table)));
    }
  }
  for (const auto& h : testing::canonical_antichains(6)) check(h);
  std::mt19937_64 rng(5150);
  std::uniform_int_distribution<std::size_t> pick_n(0, 12);
  std::uniform_int_distribution<std::size_t> pick_m(0, 10);
  std::uniform_real_distribution<double> density(0.1, 0.7);
  for (int i = 0; i < 200; ++i) {
    check(min_antichain(testing::random_antichain(rng, pick_n(rng), pick_m(rng), density(rng)).family()));
  }
}

void duality_decision(Checker& c) {
  std::mt19937_64 rng(777);
  std::size_t mutations = 0;
  std::size_t deletions = 0;
  std::size_t insertions = 0;
  auto check_false = [&](const Antichain& facets, const Antichain& mutated, const std::string& what) {
    const auto verdict = is_dual_pair(facets, mutated);
    c.expect(!verdict.dual, what + " rejected");
    c.expect(verdict.witness.has_value() &&
                 member_by_facets(*verdict.witness, facets) != member_by_blockers(*verdict.witness, mutated),
             what + " witness verifies");
    ++mutations;
  };
  while (mutations < 100) {
    const auto facets = testing::random_facets(rng, 10, 8);
    const auto n = facets.ground_size();
    const auto blockers = blockers_from_facets(facets);
    c.expect(is_dual_pair(facets, blockers).dual, "generated pair accepted " + label(facets));

    if (mutations % 2 == 0 && !blockers.empty()) {
      std::uniform_int_distribution<std::size_t> pick(0, blockers.size() - 1);
      const auto drop = pick(rng);
      SetFamily fewer(n);
      for (std::size_t i = 0; i < blockers.size(); ++i) {
        if (i != drop) fewer.push_back(blockers[i]);
      }
      check_false(facets, Antichain::checked(fewer), "deletion from " + label(blockers));
      ++deletions;
    } else if (n > 0) {
      // Insert a set that keeps the family an antichain.
      std::uniform_int_distribution<std::uint64_t> pick(0, (std::uint64_t{1} << n) - 1);
      for (int attempt = 0; attempt < 64; ++attempt) {
        const auto extra = Face::from_mask(n, pick(rng));
        const bool comparable = std::any_of(blockers.begin(), blockers.end(), [&](const Face& m) {
          return m.is_subset_of(extra) || extra.is_subset_of(m);
        });
        if (comparable) continue;
        SetFamily more = blockers.family();
        more.push_back(extra);
        check_false(facets, Antichain::checked(more), "insertion of " + extra.to_string() + " into " + label(blockers));
        ++insertions;
        break;
      }
    }
  }
  c.expect(deletions > 0 && insertions > 0, "both mutation kinds exercised");
}

void inequality_and_identity(Checker& c) {
  for (const auto& facets : corpus()) {
    const auto pair = DualPair::from_facets(facets);
    c.expect(joint_size_inequality(pair).total() >= Dyadic(1), "joint size >= 1 " + label(facets));
    c.expect(deviation_identity(pair).total() == Dyadic(1), "deviation = 1 " + label(facets));
  }
}

void hilbert(Checker& c) {
  const auto example = antichain(4, {{1, 3}, {1, 4}});
  c.expect(hilbert_dimension(example, 2) == 8, "worked example d=2 -> 8");
  c.expect(hilbert_dimension(example, 3) == 13, "worked example d=3 -> 13");
  std::mt19937_64 rng(88);
  std::uniform_int_distribution<std::size_t> pick_m(0, 6);
  std::uniform_real_distribution<double> density(0.15, 0.6);
  for (std::size_t n = 0; n <= 8; ++n) {
    for (int trial = 0; trial < 8; ++trial) {
      const auto blockers =
          min_antichain(testing::random_antichain(rng, n, pick_m(rng), density(rng)).family());
      for (std::size_t d = 0; d <= 6; ++d) {
        c.expect(hilbert_dimension(blockers, d) == testing::brute_hilbert(blockers, d),
                 "Hilbert d=" + std::to_string(d) + " " + label(blockers));
      }
    }
  }
}

void degenerate(Checker& c) {
  for (std::size_t n = 0; n <= 8; ++n) {
    const std::string tag = " n=" + std::to_string(n);
    // Void complex: no faces. Delta = {{}}: only the empty face.
    const Antichain void_facets(n);
    const auto void_blockers = antichain(n, {{}});
    const auto point_facets = antichain(n, {{}});
    SetFamily singletons(n);
    for (std::size_t i = 1; i <= n; ++i) singletons.push_back(Face::from_elements(n, {i}));
    const auto point_blockers = Antichain::checked(singletons);

    struct Case {
      std::string name;
      Antichain facets;
      Antichain blockers;
      FaceCountVector counts;
    };
    std::vector<BigInt> point_counts(n + 1, 0);
    point_counts[0] = 1;
    const std::vector<Case> cases{
        {"void" + tag, void_facets, void_blockers, FaceCountVector(n)},
        {"{{}}" + tag, point_facets, point_blockers, FaceCountVector(n, point_counts)},
    };

    for (const auto& k : cases) {
      c.expect(blockers_from_facets(k.facets) == k.blockers, k.name + " blockers");
      c.expect(facets_from_blockers(k.blockers) == k.facets, k.name + " facets");
      c.expect(is_dual_pair(k.facets, k.blockers).dual, k.name + " dual pair");
      c.expect(counts_bruteforce(k.facets) == k.counts, k.name + " brute counts");
      c.expect(counts_from_facets(k.facets) == k.counts, k.name + " facet counts");
      c.expect(counts_from_blockers(k.blockers) == k.counts, k.name + " blocker counts");
      c.expect(k_polynomial_from_counts(k.counts) == k_polynomial_from_blockers(k.blockers), k.name + " K routes");
      const auto chi = euler_bruteforce(k.counts);
      c.expect(euler_from_facets(k.facets) == chi, k.name + " euler facets");
      c.expect(euler_from_blockers(k.blockers) == chi, k.name + " euler blockers");
      const DualPair pair(k.facets, k.blockers);
      c.expect(check_prop2(pair).holds, k.name + " complement coefficients");
      c.expect(alexander_dual(alexander_dual(pair)) == pair, k.name + " dual involution");
      c.expect(joint_size_inequality(pair).at_least_one(), k.name + " joint size");
      c.expect(deviation_identity(pair).holds(), k.name + " deviation");
      c.expect(union_bound_check(k.facets, q(1, 1), Dyadic(1)).holds(), k.name + " union bound");
      for (std::size_t d = 0; d <= 4; ++d) {
        c.expect(hilbert_dimension(k.blockers, d) == testing::brute_hilbert(k.blockers, d), k.name + " Hilbert");
      }
    }
    // The telescoping sum over all singletons collapses to y^n.
    c.expect(counts_from_blockers(point_blockers).counts() == point_counts, "singleton telescoping" + tag);
    c.expect(k_polynomial_from_blockers(point_blockers) ==
                 IntPolynomial::binomial_power(1, -1, n),
             "K of {{}} is (1-t)^n" + tag);
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "worked example golden suite", 1.0, worked_example},
      {"AC2", "face counts: brute = facet formula = blocker formula (500 antichains)", 60.0, face_counts},
      {"AC3", "K from blockers = K from counts (500 antichains)", 0, k_polynomial},
      {"AC4", "a_l(D) + a_{n-l}(D*) = C(n,l) (500 antichains)", 0, complement_coefficients},
      {"AC5", "min transversals vs brute force, Tr(Tr(H)) = H", 0, dualization},
      {"AC6", "dual-pair decision: accepts pairs, rejects 100 mutations with witnesses", 0, duality_decision},
      {"AC7", "joint size >= 1 and deviation identity = 1, exact", 0, inequality_and_identity},
      {"AC8", "Hilbert values vs monomial counting (n <= 8, d <= 6)", 0, hilbert},
      {"AC9", "void complex and {{}} through every route and identity", 0, degenerate},
  };

  int failed = 0;
  for (const auto& criterion : criteria) {
    Checker checker;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.body(checker);
    } catch (const std::exception& e) {
      checker.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = criterion.time_limit_seconds == 0 || seconds < criterion.time_limit_seconds;
    const bool ok = checker.passed() && in_time;
    failed += ok ? 0 : 1;

    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3f s", seconds);
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << criterion.id << " " << criterion.title << " (" << checker.checks()
              << " checks, " << timing;
    if (criterion.time_limit_seconds != 0) std::cout << ", limit " << criterion.time_limit_seconds << " s";
    std::cout << ")\n";
    if (!checker.passed()) {
      std::cout << "    " << checker.failures() << " failed checks\n" << checker.messages();
    }
    if (!in_time) std::cout << "    exceeded time limit\n";
  }
  std::cout << (failed == 0 ? "all acceptance criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
