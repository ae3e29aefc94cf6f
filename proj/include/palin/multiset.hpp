#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace palin::oracle {

/// A multiset over the alphabet {0, .., b-1}, stored as its count vector.
/// The count vector is the canonical order-free representation: two
/// multisets are equal exactly when their counts are.
///
/// Cardinality is unconstrained here (the half-length spaces behind the
/// bijections go below the n >= 2 floor that SpaceParams enforces).
class Multiset {
public:
  explicit Multiset(std::vector<std::int64_t> counts) : counts_(std::move(counts)), total_(0) {
    if (counts_.empty()) {
      throw std::invalid_argument("multiset needs a nonempty alphabet");
    }
    for (std::int64_t c : counts_) {
      if (c < 0) throw std::invalid_argument("multiset counts must be nonnegative");
      total_ += c;
    }
  }

  /// n: how many elements the multiset holds.
  std::int64_t cardinality() const noexcept { return total_; }

  /// b: size of the alphabet the counts are indexed by.
  std::int64_t alphabet_size() const noexcept { return static_cast<std::int64_t>(counts_.size()); }

  std::span<const std::int64_t> counts() const noexcept { return counts_; }

  std::int64_t count(std::int64_t symbol) const { return counts_.at(static_cast<std::size_t>(symbol)); }

  friend bool operator==(const Multiset& a, const Multiset& b) { return a.counts_ == b.counts_; }

  /// Lexicographic order on count vectors.
  friend std::strong_ordering operator<=>(const Multiset& a, const Multiset& b) {
    return a.counts_ <=> b.counts_;
  }

private:
  std::vector<std::int64_t> counts_;
  std::int64_t total_;
};

}  // namespace palin::oracle
