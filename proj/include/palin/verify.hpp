#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "palin/oracle.hpp"
#include "palin/space.hpp"

namespace palin::cli {

struct VerifyOptions {
  std::int64_t max_n = 8;
  std::int64_t max_b = 6;
  std::uint64_t cap = oracle::kDefaultEnumerationCap;
};

struct VerifyFailure {
  std::int64_t n;
  std::int64_t b;
  std::string what;
};

struct VerifyResult {
  std::int64_t max_n;
  std::int64_t max_b;
  std::vector<VerifyFailure> failures;

  bool ok() const { return failures.empty(); }
  std::int64_t cells() const { return (max_n - 1) * (max_b - 1); }
  bool cell_ok(std::int64_t n, std::int64_t b) const;
};

/// Everything the closed forms claim about one space, checked against the
/// brute-force ground truth: enumeration counts, profile sums, and the
/// doubling / center-insertion bijections. Returns the first mismatch.
std::optional<std::string> check_cell(std::int64_t n, std::int64_t b, std::uint64_t cap);

/// check_cell over the full rectangle 2 <= n <= max_n, 2 <= b <= max_b.
VerifyResult verify_range(const VerifyOptions& opts);

}  // namespace palin::cli
