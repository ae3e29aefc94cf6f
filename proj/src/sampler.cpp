#include "palin/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "palin/oracle.hpp"

namespace palin::sampler {

namespace {

constexpr std::uint64_t kBlockDraws = 65536;

// Phi^{-1}(0.995): two-sided 99%.
constexpr double kZ99 = 2.5758293035489004;

}  // namespace

const char* to_string(Model m) {
  return m == Model::uniform_multiset ? "uniform-multiset" : "uniform-picks";
}

Model model_from_string(const std::string& name) {
  if (name == "uniform-multiset") return Model::uniform_multiset;
  if (name == "uniform-picks") return Model::uniform_picks;
  throw std::invalid_argument("unknown model: " + name);
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: bound must be positive");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t reject_from = max - max % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= reject_from);
  return x % bound;
}

oracle::Multiset sample_multiset(const SpaceParams& p, Model model, std::mt19937_64& rng) {
  const std::int64_t n = p.n();
  const std::int64_t b = p.b();
  std::vector<std::int64_t> counts(static_cast<std::size_t>(b), 0);

  if (model == Model::uniform_picks) {
    for (std::int64_t i = 0; i < n; ++i) {
      ++counts[uniform_below(rng, static_cast<std::uint64_t>(b))];
    }
    return oracle::Multiset(std::move(counts));
  }

  const std::int64_t slots = n + b - 1;
  std::vector<std::int64_t> idx(static_cast<std::size_t>(slots));
  std::iota(idx.begin(), idx.end(), std::int64_t{0});
  for (std::int64_t t = 0; t < b - 1; ++t) {
    const auto j = t + static_cast<std::int64_t>(
                           uniform_below(rng, static_cast<std::uint64_t>(slots - t)));
    std::swap(idx[static_cast<std::size_t>(t)], idx[static_cast<std::size_t>(j)]);
  }
  std::vector<std::int64_t> bars(idx.begin(), idx.begin() + (b - 1));
  std::sort(bars.begin(), bars.end());

  // Star runs between consecutive bars are the symbol counts.
  std::int64_t prev = -1;
  for (std::int64_t s = 0; s < b - 1; ++s) {
    counts[static_cast<std::size_t>(s)] = bars[static_cast<std::size_t>(s)] - prev - 1;
    prev = bars[static_cast<std::size_t>(s)];
  }
  counts[static_cast<std::size_t>(b - 1)] = slots - 1 - prev;
  return oracle::Multiset(std::move(counts));
}

std::pair<double, double> wilson_interval_99(std::uint64_t hits, std::uint64_t draws) {
  if (draws == 0) throw std::invalid_argument("draws must be at least 1");
  const double n = static_cast<double>(draws);
  const double phat = static_cast<double>(hits) / n;
  const double z2 = kZ99 * kZ99;
  const double denom = 1.0 + z2 / n;
  const double center = (phat + z2 / (2.0 * n)) / denom;
  const double half =
      kZ99 * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
  // At phat = 0 or 1 the endpoint is exactly 0 resp. 1 algebraically, but
  // the evaluation above can land one ulp inside; widen so the interval
  // always contains phat.
  const double lo = std::min(std::max(0.0, center - half), phat);
  const double hi = std::max(std::min(1.0, center + half), phat);
  return {lo, hi};
}

SampleReport estimate_pd(const SpaceParams& p, Model model, std::uint64_t draws,
                         std::uint64_t seed) {
  if (draws == 0) throw std::invalid_argument("draws must be at least 1");
  std::uint64_t hits = 0;
  std::uint64_t done = 0;
  for (std::uint64_t block = 0; done < draws; ++block) {
    const std::uint64_t take = std::min(kBlockDraws, draws - done);
    std::mt19937_64 rng(seed + block);
    for (std::uint64_t i = 0; i < take; ++i) {
      if (oracle::is_palindromic(sample_multiset(p, model, rng))) ++hits;
    }
    done += take;
  }
  const auto [lo, hi] = wilson_interval_99(hits, draws);
  return SampleReport{p,
                      model,
                      draws,
                      hits,
                      static_cast<double>(hits) / static_cast<double>(draws),
                      lo,
                      hi,
                      seed};
}

}  // namespace palin::sampler
