#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "palin/multiset.hpp"
#include "palin/rational.hpp"
#include "palin/space.hpp"

namespace palin::oracle {

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;
inline constexpr std::int64_t kDefaultPartitionCap = 120;

/// A brute-force sweep was asked to visit more states than its cap allows.
class cap_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lazily yields every multiset of cardinality n over b symbols, count
/// vectors in strictly increasing lexicographic order: (0,..,0,n) first,
/// (n,0,..,0) last. Restartable; each begin() starts a fresh sweep.
class MultisetRange {
 public:
  /// Throws cap_exceeded when C(n+b-1, b-1) > cap, naming the size.
  MultisetRange(std::int64_t n, std::int64_t b, std::uint64_t cap);

  class iterator {
   public:
    const Multiset& operator*() const { return current_; }
    const Multiset* operator->() const { return &current_; }
    iterator& operator++();
    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

   private:
    friend class MultisetRange;
    iterator(std::int64_t n, std::int64_t b);
    Multiset current_;
    bool done_ = false;
  };

  iterator begin() const { return iterator(n_, b_); }
  std::default_sentinel_t end() const { return {}; }

 private:
  std::int64_t n_;
  std::int64_t b_;
};

/// The multiset space X_b^n as a lazy range.
MultisetRange enumerate_multisets(const SpaceParams& p,
                                  std::uint64_t cap = kDefaultEnumerationCap);

/// Same sweep for cardinalities below the SpaceParams floor (the
/// half-length spaces the bijection checks walk).
MultisetRange enumerate_counts(std::int64_t n, std::int64_t b,
                               std::uint64_t cap = kDefaultEnumerationCap);

enum class Method {
  counts,  // at most one symbol with odd multiplicity, none when n is even
  search,  // exhaustively try arrangements for one equal to its reversal
};

/// Decides whether the elements of m can be arranged into a palindrome.
/// The search method is the raw definition and is refused above n = 10;
/// it exists to certify that the counts criterion agrees with it.
bool is_palindromic(const Multiset& m, Method method = Method::counts);

struct BruteCounts {
  BigInt total;
  BigInt palindromic;
};

/// Full enumeration of X_b^n, counting palindromic members by the counts
/// criterion. Ground truth for the closed forms.
BruteCounts brute_force_counts(const SpaceParams& p,
                               std::uint64_t cap = kDefaultEnumerationCap);

/// One multiplicity profile: the sorted positive counts shared by a class
/// of multisets, i.e. an integer partition of n into at most b parts.
/// class_size counts the multisets with that profile:
///   b(b-1)...(b-r+1) / prod_j m_j!
/// where r is the number of parts and m_j the multiplicities of repeated
/// part values (which distinct symbols receive which counts).
struct Profile {
  std::vector<std::int64_t> parts;  // non-increasing, positive, sums to n
  BigInt class_size;
  bool palindromic;
};

/// Streams every profile of X_b^n in ascending lexicographic order of the
/// parts tuples. Throws cap_exceeded when n > partition_cap.
void for_each_profile(const SpaceParams& p, const std::function<void(const Profile&)>& fn,
                      std::int64_t partition_cap = kDefaultPartitionCap);

/// Materialized for_each_profile.
std::vector<Profile> profiles(const SpaceParams& p,
                              std::int64_t partition_cap = kDefaultPartitionCap);

/// The doubling map behind the even closed form: every count doubled.
/// The result is palindromic, and doubled is injective.
Multiset doubled(const Multiset& m);

/// Inverse of doubled. Succeeds exactly when every count is even (i.e. m
/// is an even-cardinality palindromic multiset); otherwise throws
/// std::invalid_argument.
Multiset halved(const Multiset& m);

/// Center insertion behind the odd closed form: add one occurrence of
/// symbol to an even-cardinality palindromic multiset. The result is
/// palindromic; (m, symbol) -> result is injective. Throws
/// std::invalid_argument when m is not palindromic of even cardinality or
/// symbol is out of range.
Multiset add_center(const Multiset& m, std::int64_t symbol);

}  // namespace palin::oracle
