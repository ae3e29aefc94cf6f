#pragma once

#include <cstdint>
#include <iosfwd>

namespace palin::cli {

inline constexpr std::int64_t kGridCellCap = 1'000'000;
inline constexpr std::int64_t kExactParamCap = 1'000'000;

enum class GridMode { exact, floating };
enum class GridFormat { csv, json };

/// An inclusive (n, b) rectangle of densities to emit as plot data.
struct GridSpec {
  std::int64_t n_min = 2;
  std::int64_t n_max = 50;
  std::int64_t b_min = 2;
  std::int64_t b_max = 50;
  GridMode mode = GridMode::exact;
  GridFormat format = GridFormat::csv;

  std::int64_t cells() const { return (n_max - n_min + 1) * (b_max - b_min + 1); }
};

/// Throws std::invalid_argument on an out-of-range spec (bounds below 2,
/// inverted ranges, more than 10^6 cells, or exact-mode parameters above
/// 10^6).
void validate(const GridSpec& spec);

/// Emits one row per cell, n ascending then b ascending. CSV columns are
/// n,b,pd_num,pd_den,pd_float with pd_num/pd_den the unreduced
/// |P|/|X| integers; JSON is an array of {n, b, num, den, pd} objects with
/// num/den as decimal strings once past the 53-bit safe-integer range.
/// Float mode computes only the float column (num/den empty resp. null).
/// Output is byte-identical across runs and platforms for the same spec.
void write_grid(const GridSpec& spec, std::ostream& out);

}  // namespace palin::cli
