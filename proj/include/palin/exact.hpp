#pragma once

#include <cstdint>

#include "palin/rational.hpp"
#include "palin/space.hpp"

namespace palin {

/// C(n, k), exactly; zero when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

/// |X_b^n| = C(n + b - 1, b - 1): the stars-and-bars count of multisets of
/// cardinality n over b symbols.
BigInt space_size(const SpaceParams& p);

/// |P_b^n|, the number of palindromic multisets:
///   n even -> |X_b^(n/2)|            (doubling bijection)
///   n odd  -> b * |P_b^(n-1)|        (center insertion)
BigInt palindromic_count(const SpaceParams& p);

/// PD(X_b^n) = |P_b^n| / |X_b^n| in lowest terms. Always in (0, 1].
Rational pd_exact(const SpaceParams& p);

/// Telescoped product form of the density; equal to pd_exact as a rational.
///   n even:     prod_{i=n/2+1}^{n} i/(i+b-1)
///   n odd:  b * prod_{i=(n+1)/2}^{n} i/(i+b-1)
Rational pd_product_exact(const SpaceParams& p);

/// Same product evaluated in doubles, factors multiplied in ascending i
/// order (each factor <= 1, so rounding drift stays bounded); for odd n the
/// leading b multiplies last.
double pd_product_float(const SpaceParams& p);

/// One step of the density recurrence PD(n+2) = (alpha/beta) * PD(n), with
/// n = 2k for even parity and n = 2k+1 for odd.
/// beta - alpha is b(b-1) (even) or (b-2)(b-1) (odd), so the ratio is < 1
/// except in the odd b=2 case, where it is exactly 1.
struct DeltaFactor {
  std::int64_t k;
  std::int64_t b;
  Parity parity;
  BigInt alpha;
  BigInt beta;
  Rational value;  // alpha / beta in lowest terms
};

DeltaFactor delta_factor(std::int64_t k, std::int64_t b, Parity parity);

/// n -> infinity limit of the density: 1/2^(b-1) for even n, b/2^(b-1)
/// for odd n.
Rational limit_value(std::int64_t b, Parity parity);

/// The b -> infinity vanishing bound: n/(n+b-1) for even n (met with
/// equality at n = 2), n^((n+1)/2) / b^((n-1)/2) for odd n (may exceed 1).
Rational upper_bound(const SpaceParams& p);

/// pd_exact(n, b) - limit_value(b, parity) with n = 2k (even) or 2k+1
/// (odd). Strictly positive except for odd parity at b = 2, where the
/// density is constantly 1.
Rational tail_gap(std::int64_t k, std::int64_t b, Parity parity);

}  // namespace palin
