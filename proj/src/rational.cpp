#include "palin/rational.hpp"

#include <mpfr.h>

#include <charconv>
#include <stdexcept>

namespace palin {

Rational::Rational(const BigInt& num, const BigInt& den) : q_() {
  if (den == 0) {
    throw std::invalid_argument("rational denominator must be nonzero");
  }
  q_.get_num() = num;
  q_.get_den() = den;
  q_.canonicalize();
}

Rational::Rational(std::int64_t num, std::int64_t den)
    : Rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))) {}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.sign() == 0) {
    throw std::invalid_argument("division by zero rational");
  }
  return Rational(mpq_class(a.q_ / b.q_), Rational::canonical_tag{});
}

double Rational::to_double() const {
  mpfr_t f;
  mpfr_init2(f, 53);
  mpfr_set_q(f, q_.get_mpq_t(), MPFR_RNDN);
  double d = mpfr_get_d(f, MPFR_RNDN);
  mpfr_clear(f);
  return d;
}

std::string Rational::str() const {
  if (q_.get_den() == 1) {
    return q_.get_num().get_str();
  }
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string format_float17(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value,
                                 std::chars_format::general, 17);
  std::string s(buf, ptr);
  if (s.find('.') == std::string::npos && s.find('e') == std::string::npos) {
    s += ".0";
  }
  return s;
}

}  // namespace palin
