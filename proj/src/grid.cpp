#include "palin/grid.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

#include "palin/exact.hpp"

namespace palin::cli {

namespace {

// JSON number when inside the 53-bit safe range, quoted decimal otherwise.
std::string json_integer(const BigInt& v) {
  if (mpz_sizeinbase(v.get_mpz_t(), 2) <= 53) {
    return v.get_str();
  }
  return "\"" + v.get_str() + "\"";
}

struct Cell {
  bool exact;
  BigInt num;
  BigInt den;
  double pd;
};

Cell evaluate(std::int64_t n, std::int64_t b, GridMode mode) {
  const SpaceParams p(n, b);
  if (mode == GridMode::floating) {
    return Cell{false, 0, 0, pd_product_float(p)};
  }
  BigInt num = palindromic_count(p);
  BigInt den = space_size(p);
  const double pd = Rational(num, den).to_double();
  return Cell{true, std::move(num), std::move(den), pd};
}

}  // namespace

void validate(const GridSpec& spec) {
  if (spec.n_min < 2) throw std::invalid_argument("n must be at least 2");
  if (spec.b_min < 2) throw std::invalid_argument("b must be at least 2");
  if (spec.n_max < spec.n_min) throw std::invalid_argument("n range is inverted");
  if (spec.b_max < spec.b_min) throw std::invalid_argument("b range is inverted");
  if (spec.cells() > kGridCellCap) {
    throw std::invalid_argument("grid holds " + std::to_string(spec.cells()) +
                                " cells, above the cap of " + std::to_string(kGridCellCap));
  }
  if (spec.mode == GridMode::exact &&
      (spec.n_max > kExactParamCap || spec.b_max > kExactParamCap)) {
    throw std::invalid_argument("exact mode caps n and b at " +
                                std::to_string(kExactParamCap));
  }
}

void write_grid(const GridSpec& spec, std::ostream& out) {
  validate(spec);

  if (spec.format == GridFormat::csv) {
    out << "n,b,pd_num,pd_den,pd_float\n";
    for (std::int64_t n = spec.n_min; n <= spec.n_max; ++n) {
      for (std::int64_t b = spec.b_min; b <= spec.b_max; ++b) {
        const Cell cell = evaluate(n, b, spec.mode);
        out << n << ',' << b << ',';
        if (cell.exact) {
          out << cell.num.get_str() << ',' << cell.den.get_str();
        } else {
          out << ',';
        }
        out << ',' << format_float17(cell.pd) << '\n';
      }
    }
    return;
  }

  out << "[\n";
  bool first = true;
  for (std::int64_t n = spec.n_min; n <= spec.n_max; ++n) {
    for (std::int64_t b = spec.b_min; b <= spec.b_max; ++b) {
      const Cell cell = evaluate(n, b, spec.mode);
      if (!first) out << ",\n";
      first = false;
      out << "  {\"n\": " << n << ", \"b\": " << b << ", \"num\": "
          << (cell.exact ? json_integer(cell.num) : "null") << ", \"den\": "
          << (cell.exact ? json_integer(cell.den) : "null")
          << ", \"pd\": " << format_float17(cell.pd) << "}";
    }
  }
  out << "\n]\n";
}

}  // namespace palin::cli
