#pragma once

#include <cstddef>

namespace downsets {

/// Resource caps shared by every module. Defaults match the CLI defaults.
struct Limits {
  /// Largest admissible ground set.
  std::size_t n_max = 1024;
  /// Largest ground set for which 2^n enumeration oracles may run.
  std::size_t oracle_n_max = 20;
  /// Maximum number of subset terms enumerated directly, and maximum number
  /// of live entries in an aggregated (mask -> multiplicity) table or an
  /// intermediate transversal family.
  std::size_t term_cap = std::size_t{1} << 26;
  /// Worker threads for direct subset enumeration. Results do not depend on it.
  unsigned threads = 1;
};

/// Families of at most this many sets are summed by direct subset enumeration.
inline constexpr std::size_t kDirectEnumerationMaxSets = 20;

/// Hard ceiling for the oracle cap; 2^30 faces is already far past desk scale.
inline constexpr std::size_t kOracleHardCeiling = 30;

}  // namespace downsets
