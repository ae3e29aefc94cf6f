#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace palin {

/// Arbitrary-precision integer. Exact at any magnitude the CLI accepts.
using BigInt = mpz_class;

/// Exact rational number, always held in lowest terms with a positive
/// denominator. Equality and ordering are value-based, so
/// Rational(550, 2002) == Rational(25, 91).
class Rational {
public:
  Rational() : q_(0) {}

  explicit Rational(BigInt value) : q_(std::move(value)) {}

  /// Throws std::invalid_argument when den == 0.
  Rational(const BigInt& num, const BigInt& den);

  Rational(std::int64_t num, std::int64_t den);

  const BigInt& num() const { return q_.get_num(); }
  const BigInt& den() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }

  /// Nearest double (round half to even). Plain mpq_get_d truncates
  /// toward zero, which is off by one ulp often enough to matter for
  /// byte-stable output.
  double to_double() const;

  /// "25/91", or just "7" when the denominator is 1.
  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.q_ + b.q_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.q_ - b.q_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.q_ * b.q_); }
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t()) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
  // GMP rational arithmetic preserves canonical form, so results of the
  // operators above need no re-canonicalization.
  struct canonical_tag {};
  Rational(mpq_class q, canonical_tag) : q_(std::move(q)) {}
  explicit Rational(mpq_class q) : q_(std::move(q)) {}

  mpq_class q_;
};

/// Fixed 17-significant-digit decimal rendering (printf %g style, trailing
/// zeros trimmed), with ".0" appended to bare integers so 1 prints as
/// "1.0". Identical bytes for identical doubles on every platform.
std::string format_float17(double value);

}  // namespace palin
