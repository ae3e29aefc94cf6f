#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>

#include "palin/multiset.hpp"
#include "palin/space.hpp"

namespace palin::sampler {

/// What "random word" means.
enum class Model {
  uniform_multiset,  // every multiset equally likely (the density's measure)
  uniform_picks,     // n independent uniform symbols (does NOT match it)
};

const char* to_string(Model m);
Model model_from_string(const std::string& name);

/// Unbiased draw from {0, .., bound-1}. Rejection on top of the fully
/// specified mt19937_64 stream, so results are identical on every platform
/// (std::uniform_int_distribution is not portable).
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// One random multiset from X_b^n.
/// uniform_multiset: partial Fisher-Yates picks the b-1 bar positions among
/// the n+b-1 star/bar slots, then star runs decode to counts; every multiset
/// has probability 1/|X_b^n| at O(n+b) cost.
/// uniform_picks: tally n independent symbols.
oracle::Multiset sample_multiset(const SpaceParams& p, Model model, std::mt19937_64& rng);

struct SampleReport {
  SpaceParams params;
  Model model;
  std::uint64_t draws;
  std::uint64_t hits;      // palindromic outcomes (counts criterion)
  double estimate;         // hits / draws
  double interval_lo;      // Wilson score, 99% confidence
  double interval_hi;
  std::uint64_t seed;
};

/// 99% Wilson score interval for hits successes in draws trials. Always
/// contains hits/draws and stays inside [0, 1].
std::pair<double, double> wilson_interval_99(std::uint64_t hits, std::uint64_t draws);

/// Monte Carlo density estimate. Deterministic for a fixed seed: draws are
/// consumed in fixed 65536-draw blocks, block i seeded with seed + i, and
/// block hit counts summed, so the result does not depend on how blocks
/// would be spread across threads. Throws std::invalid_argument when
/// draws == 0.
SampleReport estimate_pd(const SpaceParams& p, Model model, std::uint64_t draws,
                         std::uint64_t seed);

}  // namespace palin::sampler
