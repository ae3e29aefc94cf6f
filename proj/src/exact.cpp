#include "palin/exact.hpp"

#include <stdexcept>

namespace palin {

namespace {

void require_factor_args(std::int64_t k, std::int64_t b) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (b < 2) throw std::invalid_argument("b must be at least 2");
}

// |X_b^m| for any m >= 0, bypassing the n >= 2 floor of SpaceParams so the
// half-length spaces of the closed forms can be sized.
BigInt multiset_count(std::int64_t m, std::int64_t b) {
  return binomial(static_cast<std::uint64_t>(m + b - 1),
                  static_cast<std::uint64_t>(b - 1));
}

}  // namespace

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt space_size(const SpaceParams& p) {
  return multiset_count(p.n(), p.b());
}

BigInt palindromic_count(const SpaceParams& p) {
  if (p.parity() == Parity::even) {
    return multiset_count(p.half(), p.b());
  }
  return BigInt(static_cast<long>(p.b())) * multiset_count(p.half(), p.b());
}

Rational pd_exact(const SpaceParams& p) {
  return Rational(palindromic_count(p), space_size(p));
}

Rational pd_product_exact(const SpaceParams& p) {
  const std::int64_t first = p.parity() == Parity::even ? p.n() / 2 + 1 : (p.n() + 1) / 2;
  BigInt num = p.parity() == Parity::odd ? BigInt(static_cast<long>(p.b())) : BigInt(1);
  BigInt den = 1;
  for (std::int64_t i = first; i <= p.n(); ++i) {
    num *= static_cast<long>(i);
    den *= static_cast<long>(i + p.b() - 1);
  }
  return Rational(num, den);
}

double pd_product_float(const SpaceParams& p) {
  const std::int64_t first = p.parity() == Parity::even ? p.n() / 2 + 1 : (p.n() + 1) / 2;
  double r = 1.0;
  for (std::int64_t i = first; i <= p.n(); ++i) {
    r *= static_cast<double>(i) / static_cast<double>(i + p.b() - 1);
  }
  if (p.parity() == Parity::odd) {
    r *= static_cast<double>(p.b());
  }
  return r;
}

DeltaFactor delta_factor(std::int64_t k, std::int64_t b, Parity parity) {
  require_factor_args(k, b);
  const BigInt kk(static_cast<long>(k));
  const BigInt bb(static_cast<long>(b));
  BigInt alpha;
  BigInt beta;
  if (parity == Parity::even) {
    const BigInt common = 4 * kk * kk + (4 * bb + 2) * kk;
    alpha = common + 2 * bb;
    beta = common + bb * bb + bb;
  } else {
    const BigInt common = 4 * kk * kk + (4 * bb + 6) * kk;
    alpha = common + 6 * bb;
    beta = common + bb * bb + 3 * bb + 2;
  }
  Rational value(alpha, beta);
  return DeltaFactor{k, b, parity, std::move(alpha), std::move(beta), std::move(value)};
}

Rational limit_value(std::int64_t b, Parity parity) {
  if (b < 2) throw std::invalid_argument("b must be at least 2");
  BigInt pow2;
  mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(b - 1));
  if (parity == Parity::even) {
    return Rational(BigInt(1), pow2);
  }
  return Rational(BigInt(static_cast<long>(b)), pow2);
}

Rational upper_bound(const SpaceParams& p) {
  if (p.parity() == Parity::even) {
    return Rational(p.n(), p.n() + p.b() - 1);
  }
  BigInt num;
  BigInt den;
  mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(p.n()),
                static_cast<unsigned long>((p.n() + 1) / 2));
  mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(p.b()),
                static_cast<unsigned long>((p.n() - 1) / 2));
  return Rational(num, den);
}

Rational tail_gap(std::int64_t k, std::int64_t b, Parity parity) {
  require_factor_args(k, b);
  const std::int64_t n = parity == Parity::even ? 2 * k : 2 * k + 1;
  return pd_exact(SpaceParams(n, b)) - limit_value(b, parity);
}

}  // namespace palin
