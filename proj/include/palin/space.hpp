#pragma once

#include <cstdint>
#include <stdexcept>

namespace palin {

enum class Parity { even, odd };

inline const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

inline Parity parity_of(std::int64_t n) { return n % 2 == 0 ? Parity::even : Parity::odd; }

/// The pair (n, b) identifying the multiset space X_b^n: words of length n
/// over an alphabet of b distinct symbols. Both must be at least 2.
class SpaceParams {
public:
  SpaceParams(std::int64_t n, std::int64_t b) : n_(n), b_(b), parity_(parity_of(n)) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    if (b < 2) throw std::invalid_argument("b must be at least 2");
  }

  std::int64_t n() const noexcept { return n_; }
  std::int64_t b() const noexcept { return b_; }
  Parity parity() const noexcept { return parity_; }

  /// k = floor(n/2), the half-length driving the closed forms.
  std::int64_t half() const noexcept { return n_ / 2; }

  friend bool operator==(const SpaceParams& a, const SpaceParams& b) {
    return a.n_ == b.n_ && a.b_ == b.b_;
  }

private:
  std::int64_t n_;
  std::int64_t b_;
  Parity parity_;
};

}  // namespace palin
