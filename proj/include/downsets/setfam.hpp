#pragma once

// Ground-set primitives: faces as bit blocks over [n] = {1, ..., n}, set
// families, antichains, membership tests and the full-enumeration oracle.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "downsets/limits.hpp"

namespace downsets {

/// A subset of [n], stored as a membership mask of ceil(n / 64) words
/// (inline up to n = 128). Element i (1-based) lives in bit (i - 1). Bits
/// beyond n are always clear.
class Face {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Face() = default;
  /// The empty set over [n].
  explicit Face(std::size_t n);

  static Face full(std::size_t n);
  /// Throws MemberOutOfRange for 0 or any element > n.
  static Face from_elements(std::size_t n, std::span<const std::size_t> elements);
  static Face from_elements(std::size_t n, std::initializer_list<std::size_t> elements);
  /// Low 64 bits only; requires n <= 64 and no bit at or beyond n.
  static Face from_mask(std::size_t n, std::uint64_t mask);

  std::size_t ground_size() const noexcept { return n_; }
  std::size_t cardinality() const noexcept;
  bool empty() const noexcept;

  bool contains(std::size_t element) const;
  void insert(std::size_t element);
  void erase(std::size_t element);

  bool is_subset_of(const Face& other) const noexcept;
  bool intersects(const Face& other) const noexcept;

  Face& operator&=(const Face& other) noexcept;
  Face& operator|=(const Face& other) noexcept;
  friend Face operator&(Face lhs, const Face& rhs) noexcept { return lhs &= rhs; }
  friend Face operator|(Face lhs, const Face& rhs) noexcept { return lhs |= rhs; }

  /// [n] \ this.
  Face complement() const;

  /// Elements in increasing order, 1-based.
  std::vector<std::size_t> elements() const;
  std::span<const Word> words() const noexcept { return {words_.data(), words_.size()}; }

  /// Canonical order: ground size, then cardinality, then numeric mask value.
  friend std::strong_ordering operator<=>(const Face& lhs, const Face& rhs) noexcept;
  friend bool operator==(const Face& lhs, const Face& rhs) noexcept = default;

  std::size_t hash() const noexcept;

  /// "{1,3,4}", or "{}" for the empty set.
  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  boost::container::small_vector<Word, 2> words_;
};

struct FaceHash {
  std::size_t operator()(const Face& face) const noexcept { return face.hash(); }
};

/// A finite sequence of faces over an explicit ground set [n].
class SetFamily {
 public:
  SetFamily() = default;
  explicit SetFamily(std::size_t n) : n_(n) {}
  /// Throws GroundSizeMismatch if a member lives over a different n.
  SetFamily(std::size_t n, std::vector<Face> members);

  /// Convenience: each inner list is a set of 1-based elements.
  static SetFamily from_lists(std::size_t n,
                              const std::vector<std::vector<std::size_t>>& sets);

  std::size_t ground_size() const noexcept { return n_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const std::vector<Face>& members() const noexcept { return members_; }
  const Face& operator[](std::size_t i) const { return members_[i]; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  void push_back(Face face);

  /// Sorted canonically and duplicate-free.
  bool is_normalized() const noexcept;

  std::string to_string() const;

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Face> members_;
};

/// A normalized family in which no member is contained in another.
class Antichain {
 public:
  Antichain() = default;
  /// Empty antichain over [n].
  explicit Antichain(std::size_t n) : family_(n) {}

  /// Normalizes, then throws NotAnAntichain on any containment.
  static Antichain checked(const SetFamily& family);
  static Antichain from_lists(std::size_t n,
                              const std::vector<std::vector<std::size_t>>& sets);

  std::size_t ground_size() const noexcept { return family_.ground_size(); }
  std::size_t size() const noexcept { return family_.size(); }
  bool empty() const noexcept { return family_.empty(); }
  const SetFamily& family() const noexcept { return family_; }
  const std::vector<Face>& members() const noexcept { return family_.members(); }
  const Face& operator[](std::size_t i) const { return family_[i]; }
  auto begin() const noexcept { return family_.begin(); }
  auto end() const noexcept { return family_.end(); }
  bool contains(const Face& face) const;

  std::string to_string() const { return family_.to_string(); }

  friend bool operator==(const Antichain&, const Antichain&) = default;

 private:
  struct Trusted {};
  Antichain(Trusted, SetFamily normalized) : family_(std::move(normalized)) {}

  friend Antichain max_antichain(const SetFamily&);
  friend Antichain min_antichain(const SetFamily&);
  friend Antichain complement_family(const Antichain&);

  SetFamily family_;
};

/// O(m^2 * n / 64) containment scan.
bool is_antichain(const SetFamily& family);

/// Canonical order, duplicates removed.
SetFamily normalize(const SetFamily& family);

/// Members not strictly contained in another member.
Antichain max_antichain(const SetFamily& family);
/// Members not strictly containing another member.
Antichain min_antichain(const SetFamily& family);

/// sigma lies in the down-set generated by the facets.
bool member_by_facets(const Face& sigma, const Antichain& facets);
/// sigma contains no blocker.
bool member_by_blockers(const Face& sigma, const Antichain& blockers);
/// The monotone DNF OR_{M} AND_{i in M} x_i at the given 0/1 assignment.
bool eval_monotone_dnf(const Antichain& blockers, const Face& assignment);

/// Every face of the down-set generated by `facets`, normalized.
/// Throws GroundSetTooLarge when n exceeds limits.oracle_n_max.
SetFamily enumerate_downset(const Antichain& facets, const Limits& limits = {});

}  // namespace downsets

template <>
struct std::hash<downsets::Face> {
  std::size_t operator()(const downsets::Face& face) const noexcept { return face.hash(); }
};
