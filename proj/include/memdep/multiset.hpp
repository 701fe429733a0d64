#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "memdep/names.hpp"

namespace memdep {

/// Multiset of objects. Zero-count entries are never stored, so two multisets
/// holding the same occurrences compare equal.
class Multiset {
 public:
  using Count = std::uint64_t;
  using Storage = std::map<ObjectId, Count>;

  Multiset() = default;
  Multiset(std::initializer_list<ObjectId> occurrences);

  /// Builds a multiset from a whitespace separated list such as `a a b`.
  static Multiset parse_words(std::string_view words);

  void add(const ObjectId& object, Count n = 1);
  /// Removes `n` occurrences; throws std::logic_error if fewer are present.
  void remove(const ObjectId& object, Count n = 1);

  Count count(const ObjectId& object) const;
  bool contains(const ObjectId& object) const { return count(object) > 0; }
  /// Total number of occurrences; saturates at the maximum Count.
  Count total() const;
  std::size_t distinct() const noexcept { return counts_.size(); }
  bool empty() const noexcept { return counts_.empty(); }

  /// Every multiplicity multiplied by `factor` (saturating).
  Multiset scaled(Count factor) const;
  std::vector<ObjectId> support() const;

  Multiset& operator+=(const Multiset& other);
  friend Multiset operator+(Multiset lhs, const Multiset& rhs) { return lhs += rhs; }

  const Storage& entries() const noexcept { return counts_; }
  Storage::const_iterator begin() const noexcept { return counts_.begin(); }
  Storage::const_iterator end() const noexcept { return counts_.end(); }

  bool operator==(const Multiset&) const = default;
  auto operator<=>(const Multiset&) const = default;

 private:
  Storage counts_;
};

/// Saturating arithmetic used for multiplicities.
Multiset::Count saturating_add(Multiset::Count a, Multiset::Count b);
Multiset::Count saturating_mul(Multiset::Count a, Multiset::Count b);

}  // namespace memdep
