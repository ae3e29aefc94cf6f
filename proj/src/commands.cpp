#include "palin/commands.hpp"

#include <algorithm>
#include <exception>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "palin/exact.hpp"
#include "palin/rational.hpp"

namespace palin::cli {

namespace {

// Anything a command throws is a usage/validation problem: report and exit 2.
// Verification mismatches are not exceptions; they return 1 from the body.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

void require_exact_cap(std::int64_t value, const char* name) {
  if (value > kExactParamCap) {
    throw std::invalid_argument(std::string(name) + " exceeds the exact-mode cap of " +
                                std::to_string(kExactParamCap));
  }
}

// The float product loop is O(n); keep runaway inputs out.
constexpr std::int64_t kFloatParamCap = 1'000'000'000;

std::string parts_string(const std::vector<std::int64_t>& parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) s += '+';
    s += std::to_string(parts[i]);
  }
  return s;
}

}  // namespace

int run_pd(const PdOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    SpaceParams params(opts.n, opts.b);
    if (opts.use_float) {
      if (opts.n > kFloatParamCap) {
        throw std::invalid_argument("n exceeds the float-mode cap of " +
                                    std::to_string(kFloatParamCap));
      }
      out << format_float17(pd_product_float(params)) << '\n';
      return 0;
    }
    require_exact_cap(opts.n, "n");
    require_exact_cap(opts.b, "b");
    const BigInt count = palindromic_count(params);
    const BigInt size = space_size(params);
    const Rational pd = pd_exact(params);
    out << count << '/' << size << " = " << pd.str() << " \xE2\x89\x88 "
        << format_float17(pd.to_double()) << '\n';
    return 0;
  });
}

int run_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (opts.max_n < 2) throw std::invalid_argument("max-n must be at least 2");
    if (opts.max_b < 2) throw std::invalid_argument("max-b must be at least 2");

    const VerifyResult result = verify_range(opts);

    const auto emit_row = [&out](const std::vector<std::string>& cells) {
      std::string line;
      for (const std::string& cell : cells) {
        line += cell;
        line.append(cell.size() < 7 ? 7 - cell.size() : 1, ' ');
      }
      line.erase(line.find_last_not_of(' ') + 1);
      out << line << '\n';
    };

    std::vector<std::string> row{""};
    for (std::int64_t b = 2; b <= result.max_b; ++b) row.push_back("b=" + std::to_string(b));
    emit_row(row);
    for (std::int64_t n = 2; n <= result.max_n; ++n) {
      row.assign(1, "n=" + std::to_string(n));
      for (std::int64_t b = 2; b <= result.max_b; ++b) {
        row.push_back(result.cell_ok(n, b) ? "ok" : "FAIL");
      }
      emit_row(row);
    }

    const auto passed = result.cells() - static_cast<std::int64_t>(result.failures.size());
    out << passed << '/' << result.cells() << " cells ok\n";

    if (!result.ok()) {
      const VerifyFailure& f = result.failures.front();
      err << "first failure: n=" << f.n << " b=" << f.b << ": " << f.what << '\n';
      return 1;
    }
    return 0;
  });
}

int run_grid(const GridOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    validate(opts.spec);
    if (opts.out_path.empty()) {
      write_grid(opts.spec, out);
      return 0;
    }
    std::ofstream file(opts.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << opts.out_path << '\n';
      return 2;
    }
    write_grid(opts.spec, file);
    file.flush();
    if (!file) {
      err << "error: write failed: " << opts.out_path << '\n';
      return 2;
    }
    return 0;
  });
}

int run_converge(const ConvergeOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (opts.b < 2) throw std::invalid_argument("b must be at least 2");
    if (opts.k_max < 1) throw std::invalid_argument("k-max must be at least 1");
    require_exact_cap(opts.b, "b");
    const std::int64_t n_last = 2 * opts.k_max + (opts.parity == Parity::odd ? 1 : 0);
    if (n_last > kExactParamCap) {
      throw std::invalid_argument("k-max puts n above the exact-mode cap of " +
                                  std::to_string(kExactParamCap));
    }

    // The odd b=2 space is all palindromes: the sequence is flat at 1
    // instead of strictly decreasing.
    const bool flat = opts.parity == Parity::odd && opts.b == 2;
    const Rational one(1, 1);
    const Rational zero(0, 1);

    out << std::right << std::setw(7) << "k" << std::setw(9) << "n" << "  " << std::left
        << std::setw(24) << "pd" << std::setw(24) << "delta" << "gap" << '\n';

    std::vector<std::string> violations;
    std::optional<Rational> prev_pd;
    std::optional<Rational> prev_gap;
    for (std::int64_t k = 1; k <= opts.k_max; ++k) {
      const std::int64_t n = 2 * k + (opts.parity == Parity::odd ? 1 : 0);
      const SpaceParams params(n, opts.b);
      const Rational pd = pd_exact(params);
      const Rational delta = delta_factor(k, opts.b, opts.parity).value;
      const Rational gap = tail_gap(k, opts.b, opts.parity);

      out << std::right << std::setw(7) << k << std::setw(9) << n << "  " << std::left
          << std::setw(24) << format_float17(pd.to_double()) << std::setw(24)
          << format_float17(delta.to_double()) << format_float17(gap.to_double()) << '\n';

      const std::string at = " at k=" + std::to_string(k);
      if (flat) {
        if (pd != one) violations.push_back("pd != 1" + at);
        if (delta != one) violations.push_back("delta != 1" + at);
        if (gap != zero) violations.push_back("gap != 0" + at);
      } else {
        if (delta >= one) violations.push_back("delta >= 1" + at);
        if (gap <= zero) violations.push_back("gap <= 0" + at);
        if (prev_pd && pd >= *prev_pd) violations.push_back("pd not strictly decreasing" + at);
        if (prev_gap && gap >= *prev_gap) violations.push_back("gap not strictly decreasing" + at);
      }
      prev_pd = pd;
      prev_gap = gap;
    }

    if (violations.empty()) {
      out << "monotonicity violations: none\n";
    } else {
      for (const std::string& v : violations) out << "violation: " << v << '\n';
    }
    const Rational lim = limit_value(opts.b, opts.parity);
    out << "limit = " << lim.str() << " \xE2\x89\x88 " << format_float17(lim.to_double()) << '\n';
    return violations.empty() ? 0 : 1;
  });
}

int run_profiles(const ProfilesOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    SpaceParams params(opts.n, opts.b);
    require_exact_cap(opts.b, "b");

    const std::int64_t width =
        std::clamp<std::int64_t>(2 * opts.n - 1, 12, 36);
    out << std::left << std::setw(width) << "parts" << std::right << std::setw(16)
        << "class_size" << "  palindromic\n";

    BigInt total = 0;
    BigInt palindromic = 0;
    oracle::for_each_profile(
        params,
        [&](const oracle::Profile& profile) {
          out << std::left << std::setw(width) << parts_string(profile.parts) << std::right
              << std::setw(16) << profile.class_size << "  "
              << (profile.palindromic ? "yes" : "no") << '\n';
          total += profile.class_size;
          if (profile.palindromic) palindromic += profile.class_size;
        },
        opts.partition_cap);

    out << "palindromic " << palindromic << " of " << total << '\n';

    if (total != space_size(params) || palindromic != palindromic_count(params)) {
      err << "profile totals disagree with the closed forms: got " << palindromic << '/'
          << total << ", expected " << palindromic_count(params) << '/' << space_size(params)
          << '\n';
      return 1;
    }
    return 0;
  });
}

int run_sample(const SampleOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    SpaceParams params(opts.n, opts.b);
    const sampler::SampleReport report =
        sampler::estimate_pd(params, opts.model, opts.draws, opts.seed);
    out << "space    : n=" << params.n() << " b=" << params.b() << '\n'
        << "model    : " << sampler::to_string(report.model) << '\n'
        << "draws    : " << report.draws << '\n'
        << "hits     : " << report.hits << '\n'
        << "estimate : " << format_float17(report.estimate) << '\n'
        << "wilson99 : [" << format_float17(report.interval_lo) << ", "
        << format_float17(report.interval_hi) << "]\n"
        << "seed     : " << report.seed << '\n';
    return 0;
  });
}

}  // namespace palin::cli
