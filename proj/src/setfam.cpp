#include "downsets/setfam.hpp"

#include <algorithm>
#include <bit>

#include "downsets/errors.hpp"

namespace downsets {

namespace {

std::size_t word_count(std::size_t n) { return (n + Face::kWordBits - 1) / Face::kWordBits; }

void check_element(std::size_t n, std::size_t element) {
  if (element == 0 || element > n) {
    throw MemberOutOfRange("element " + std::to_string(element) + " is outside [1, " +
                           std::to_string(n) + "]");
  }
}

void check_same_ground(const Face& a, const Face& b) {
  if (a.ground_size() != b.ground_size()) {
    throw GroundSizeMismatch("faces over n=" + std::to_string(a.ground_size()) + " and n=" +
                             std::to_string(b.ground_size()));
  }
}

}  // namespace

Face::Face(std::size_t n) : n_(n), words_(word_count(n), 0) {}

Face Face::full(std::size_t n) {
  Face face(n);
  for (auto& w : face.words_) w = ~Word{0};
  if (const auto tail = n % kWordBits; tail != 0) face.words_.back() = (Word{1} << tail) - 1;
  return face;
}

Face Face::from_elements(std::size_t n, std::span<const std::size_t> elements) {
  Face face(n);
  for (auto e : elements) face.insert(e);
  return face;
}

Face Face::from_elements(std::size_t n, std::initializer_list<std::size_t> elements) {
  return from_elements(n, std::span<const std::size_t>(elements.begin(), elements.size()));
}

Face Face::from_mask(std::size_t n, std::uint64_t mask) {
  if (n > kWordBits) throw GroundSetTooLarge("from_mask needs n <= 64");
  if (n < kWordBits && (mask >> n) != 0) {
    throw MemberOutOfRange("mask has bits beyond n=" + std::to_string(n));
  }
  Face face(n);
  if (n > 0) face.words_[0] = mask;
  return face;
}

std::size_t Face::cardinality() const noexcept {
  std::size_t count = 0;
  for (auto w : words_) count += static_cast<std::size_t>(std::popcount(w));
  return count;
}

bool Face::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

bool Face::contains(std::size_t element) const {
  check_element(n_, element);
  const auto bit = element - 1;
  return (words_[bit / kWordBits] >> (bit % kWordBits)) & 1U;
}

void Face::insert(std::size_t element) {
  check_element(n_, element);
  const auto bit = element - 1;
  words_[bit / kWordBits] |= Word{1} << (bit % kWordBits);
}

void Face::erase(std::size_t element) {
  check_element(n_, element);
  const auto bit = element - 1;
  words_[bit / kWordBits] &= ~(Word{1} << (bit % kWordBits));
}

bool Face::is_subset_of(const Face& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool Face::intersects(const Face& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

Face& Face::operator&=(const Face& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

Face& Face::operator|=(const Face& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

Face Face::complement() const {
  Face result = full(n_);
  for (std::size_t i = 0; i < words_.size(); ++i) result.words_[i] &= ~words_[i];
  return result;
}

std::vector<std::size_t> Face::elements() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (Word w = words_[i]; w != 0; w &= w - 1) {
      out.push_back(i * kWordBits + static_cast<std::size_t>(std::countr_zero(w)) + 1);
    }
  }
  return out;
}

std::strong_ordering operator<=>(const Face& lhs, const Face& rhs) noexcept {
  if (auto c = lhs.n_ <=> rhs.n_; c != 0) return c;
  if (auto c = lhs.cardinality() <=> rhs.cardinality(); c != 0) return c;
  for (std::size_t i = lhs.words_.size(); i-- > 0;) {
    if (auto c = lhs.words_[i] <=> rhs.words_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::size_t Face::hash() const noexcept {
  // boost::hash_combine mixing
  std::size_t seed = n_;
  for (auto w : words_) seed ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  return seed;
}

std::string Face::to_string() const {
  std::string out = "{";
  bool first = true;
  for (auto e : elements()) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

SetFamily::SetFamily(std::size_t n, std::vector<Face> members) : n_(n), members_(std::move(members)) {
  for (const auto& m : members_) {
    if (m.ground_size() != n_) {
      throw GroundSizeMismatch("member " + m.to_string() + " lives over n=" +
                               std::to_string(m.ground_size()) + ", family over n=" +
                               std::to_string(n_));
    }
  }
}

SetFamily SetFamily::from_lists(std::size_t n, const std::vector<std::vector<std::size_t>>& sets) {
  SetFamily family(n);
  for (const auto& s : sets) family.members_.push_back(Face::from_elements(n, s));
  return family;
}

void SetFamily::push_back(Face face) {
  if (face.ground_size() != n_) {
    throw GroundSizeMismatch("member " + face.to_string() + " does not live over n=" +
                             std::to_string(n_));
  }
  members_.push_back(std::move(face));
}

bool SetFamily::is_normalized() const noexcept {
  return std::adjacent_find(members_.begin(), members_.end(),
                            [](const Face& a, const Face& b) { return !(a < b); }) == members_.end();
}

std::string SetFamily::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i != 0) out += ", ";
    out += members_[i].to_string();
  }
  return out + "}";
}

Antichain Antichain::checked(const SetFamily& family) {
  auto normalized = normalize(family);
  if (!is_antichain(normalized)) {
    throw NotAnAntichain("family " + normalized.to_string() + " has a member inside another");
  }
  return Antichain(Trusted{}, std::move(normalized));
}

Antichain Antichain::from_lists(std::size_t n, const std::vector<std::vector<std::size_t>>& sets) {
  return checked(SetFamily::from_lists(n, sets));
}

bool Antichain::contains(const Face& face) const {
  return std::binary_search(family_.begin(), family_.end(), face);
}

bool is_antichain(const SetFamily& family) {
  const auto& m = family.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (i != j && m[i].is_subset_of(m[j])) return false;
    }
  }
  return true;
}

SetFamily normalize(const SetFamily& family) {
  auto members = family.members();
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return SetFamily(family.ground_size(), std::move(members));
}

Antichain max_antichain(const SetFamily& family) {
  const auto normalized = normalize(family);
  const auto& m = normalized.members();
  std::vector<Face> kept;
  // Largest first: a set survives iff no already-kept set contains it.
  for (auto it = m.rbegin(); it != m.rend(); ++it) {
    const bool dominated =
        std::any_of(kept.begin(), kept.end(), [&](const Face& k) { return it->is_subset_of(k); });
    if (!dominated) kept.push_back(*it);
  }
  std::reverse(kept.begin(), kept.end());
  return Antichain(Antichain::Trusted{}, SetFamily(family.ground_size(), std::move(kept)));
}

Antichain min_antichain(const SetFamily& family) {
  const auto normalized = normalize(family);
  std::vector<Face> kept;
  for (const auto& f : normalized) {
    const bool dominated =
        std::any_of(kept.begin(), kept.end(), [&](const Face& k) { return k.is_subset_of(f); });
    if (!dominated) kept.push_back(f);
  }
  return Antichain(Antichain::Trusted{}, SetFamily(family.ground_size(), std::move(kept)));
}

bool member_by_facets(const Face& sigma, const Antichain& facets) {
  for (const auto& f : facets) {
    check_same_ground(sigma, f);
    if (sigma.is_subset_of(f)) return true;
  }
  return false;
}

bool member_by_blockers(const Face& sigma, const Antichain& blockers) {
  for (const auto& m : blockers) {
    check_same_ground(sigma, m);
    if (m.is_subset_of(sigma)) return false;
  }
  return true;
}

bool eval_monotone_dnf(const Antichain& blockers, const Face& assignment) {
  return !member_by_blockers(assignment, blockers);
}

SetFamily enumerate_downset(const Antichain& facets, const Limits& limits) {
  const auto n = facets.ground_size();
  const auto cap = std::min(limits.oracle_n_max, kOracleHardCeiling);
  if (n > cap) {
    throw GroundSetTooLarge("down-set enumeration needs n <= " + std::to_string(cap) +
                            ", got n=" + std::to_string(n));
  }
  std::vector<Face> faces;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    auto sigma = Face::from_mask(n, mask);
    if (member_by_facets(sigma, facets)) faces.push_back(std::move(sigma));
  }
  std::sort(faces.begin(), faces.end());
  return SetFamily(n, std::move(faces));
}

}  // namespace downsets
