#include "palin/verify.hpp"

#include <set>

#include "palin/exact.hpp"

namespace palin::cli {

namespace {

using oracle::Multiset;

std::set<Multiset> palindromic_subset(std::int64_t n, std::int64_t b, std::uint64_t cap) {
  std::set<Multiset> out;
  for (const Multiset& m : oracle::enumerate_counts(n, b, cap)) {
    if (oracle::is_palindromic(m)) out.insert(m);
  }
  return out;
}

// Even case: doubling the half space must land exactly on the palindromic
// subset, and halving must invert it.
std::optional<std::string> check_even_bijection(std::int64_t n, std::int64_t b,
                                                std::uint64_t cap) {
  std::set<Multiset> image;
  for (const Multiset& half : oracle::enumerate_counts(n / 2, b, cap)) {
    const Multiset d = oracle::doubled(half);
    if (d.cardinality() != n) return "doubled multiset has wrong cardinality";
    if (!oracle::is_palindromic(d)) return "doubled multiset is not palindromic";
    if (oracle::halved(d) != half) return "halved(doubled(m)) != m";
    if (!image.insert(d).second) return "doubling is not injective";
  }
  if (image != palindromic_subset(n, b, cap)) {
    return "doubling image differs from the palindromic subset";
  }
  return std::nullopt;
}

// Odd case: center insertion over P_b^(n-1) x alphabet must be injective
// and land exactly on the odd palindromic subset.
std::optional<std::string> check_odd_bijection(std::int64_t n, std::int64_t b,
                                               std::uint64_t cap) {
  std::set<Multiset> image;
  std::uint64_t sources = 0;
  for (const Multiset& m : oracle::enumerate_counts(n - 1, b, cap)) {
    if (!oracle::is_palindromic(m)) continue;
    ++sources;
    for (std::int64_t x = 0; x < b; ++x) {
      const Multiset grown = oracle::add_center(m, x);
      if (!oracle::is_palindromic(grown)) return "center insertion broke palindromicity";
      if (!image.insert(grown).second) return "center insertion is not injective";
    }
  }
  if (image.size() != sources * static_cast<std::uint64_t>(b)) {
    return "center insertion image is not b-to-one";
  }
  if (image != palindromic_subset(n, b, cap)) {
    return "center insertion image differs from the palindromic subset";
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> check_cell(std::int64_t n, std::int64_t b, std::uint64_t cap) {
  const SpaceParams p(n, b);

  const oracle::BruteCounts counts = oracle::brute_force_counts(p, cap);
  if (counts.total != space_size(p)) {
    return "space size mismatch: closed form " + space_size(p).get_str() +
           ", enumeration " + counts.total.get_str();
  }
  if (counts.palindromic != palindromic_count(p)) {
    return "palindromic count mismatch: closed form " + palindromic_count(p).get_str() +
           ", enumeration " + counts.palindromic.get_str();
  }

  BigInt profile_total = 0;
  BigInt profile_pal = 0;
  oracle::for_each_profile(p, [&](const oracle::Profile& pr) {
    profile_total += pr.class_size;
    if (pr.palindromic) profile_pal += pr.class_size;
  });
  if (profile_total != counts.total) {
    return "profile class sizes sum to " + profile_total.get_str() + ", expected " +
           counts.total.get_str();
  }
  if (profile_pal != counts.palindromic) {
    return "palindromic profiles sum to " + profile_pal.get_str() + ", expected " +
           counts.palindromic.get_str();
  }

  return n % 2 == 0 ? check_even_bijection(n, b, cap) : check_odd_bijection(n, b, cap);
}

bool VerifyResult::cell_ok(std::int64_t n, std::int64_t b) const {
  for (const VerifyFailure& f : failures) {
    if (f.n == n && f.b == b) return false;
  }
  return true;
}

VerifyResult verify_range(const VerifyOptions& opts) {
  if (opts.max_n < 2 || opts.max_b < 2) {
    throw std::invalid_argument("verify range needs max-n >= 2 and max-b >= 2");
  }
  VerifyResult result{opts.max_n, opts.max_b, {}};
  for (std::int64_t n = 2; n <= opts.max_n; ++n) {
    for (std::int64_t b = 2; b <= opts.max_b; ++b) {
      if (auto problem = check_cell(n, b, opts.cap)) {
        result.failures.push_back(VerifyFailure{n, b, *problem});
      }
    }
  }
  return result;
}

}  // namespace palin::cli
