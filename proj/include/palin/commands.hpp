#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "palin/grid.hpp"
#include "palin/oracle.hpp"
#include "palin/sampler.hpp"
#include "palin/space.hpp"
#include "palin/verify.hpp"

// Command implementations behind the palin CLI. Each returns the process
// exit code: 0 success, 1 verification mismatch, 2 usage/validation error.

namespace palin::cli {

struct PdOptions {
  std::int64_t n = 0;
  std::int64_t b = 0;
  bool use_float = false;
};

/// "550/2002 = 25/91 ≈ 0.27472527472527475"; float mode prints only the
/// decimal.
int run_pd(const PdOptions& opts, std::ostream& out, std::ostream& err);

/// Oracle sweep over 2..max_n x 2..max_b; pass/fail matrix, exit 1 naming
/// the first failing cell on any mismatch.
int run_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);

struct GridOptions {
  GridSpec spec;
  std::string out_path;  // empty: stdout
};

int run_grid(const GridOptions& opts, std::ostream& out, std::ostream& err);

struct ConvergeOptions {
  std::int64_t b = 2;
  Parity parity = Parity::even;
  std::int64_t k_max = 20;
};

/// k, PD, delta, tail gap per row; monotonicity violations flagged; final
/// line is the n -> infinity limit.
int run_converge(const ConvergeOptions& opts, std::ostream& out, std::ostream& err);

struct ProfilesOptions {
  std::int64_t n = 0;
  std::int64_t b = 0;
  std::int64_t partition_cap = oracle::kDefaultPartitionCap;
};

int run_profiles(const ProfilesOptions& opts, std::ostream& out, std::ostream& err);

struct SampleOptions {
  std::int64_t n = 0;
  std::int64_t b = 0;
  sampler::Model model = sampler::Model::uniform_multiset;
  std::uint64_t draws = 100'000;
  std::uint64_t seed = 0;
};

int run_sample(const SampleOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace palin::cli
