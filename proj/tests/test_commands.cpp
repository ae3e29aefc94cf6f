#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "palin/commands.hpp"

using namespace palin;
using namespace palin::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

template <typename Opts, typename Fn>
Run invoke(Fn fn, const Opts& opts) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = fn(opts, out, err);
  return Run{code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("pd prints unreduced, reduced, and decimal forms") {
  const Run r = invoke(run_pd, PdOptions{5, 10, false});
  CHECK(r.code == 0);
  CHECK(r.out == "550/2002 = 25/91 \xE2\x89\x88 0.27472527472527475\n");
  CHECK(r.err.empty());

  const Run unit = invoke(run_pd, PdOptions{3, 2, false});
  CHECK(unit.code == 0);
  CHECK(unit.out == "4/4 = 1 \xE2\x89\x88 1.0\n");
}

TEST_CASE("pd float mode prints only the decimal") {
  const Run r = invoke(run_pd, PdOptions{5, 10, true});
  CHECK(r.code == 0);
  CHECK(r.out == "0.27472527472527475\n");
}

TEST_CASE("pd validates parameters with exit 2") {
  const Run low_n = invoke(run_pd, PdOptions{1, 10, false});
  CHECK(low_n.code == 2);
  CHECK(low_n.out.empty());
  CHECK(low_n.err.find("n must be at least 2") != std::string::npos);

  const Run low_b = invoke(run_pd, PdOptions{5, 1, false});
  CHECK(low_b.code == 2);
  CHECK(low_b.err.find("b must be at least 2") != std::string::npos);

  const Run big = invoke(run_pd, PdOptions{2000000, 2, false});
  CHECK(big.code == 2);
  CHECK(big.err.find("exact-mode cap") != std::string::npos);
}

TEST_CASE("verify renders a pass matrix and exits 0 on agreement") {
  VerifyOptions opts;
  opts.max_n = 5;
  opts.max_b = 4;
  const Run r = invoke(run_verify, opts);
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  CHECK(r.out.find("b=4") != std::string::npos);
  CHECK(r.out.find("n=5") != std::string::npos);
  CHECK(r.out.find("12/12 cells ok") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("verify rejects a degenerate range with exit 2") {
  VerifyOptions opts;
  opts.max_n = 1;
  const Run r = invoke(run_verify, opts);
  CHECK(r.code == 2);
  CHECK(r.err.find("max-n") != std::string::npos);
}

TEST_CASE("verify reports the enumeration cap with exit 2 when a cell is too big") {
  VerifyOptions opts;
  opts.max_n = 8;
  opts.max_b = 6;
  opts.cap = 10;
  const Run r = invoke(run_verify, opts);
  CHECK(r.code == 2);
  CHECK(r.err.find("enumeration cap exceeded") != std::string::npos);
}

TEST_CASE("grid emits the documented CSV bytes") {
  GridOptions opts;
  opts.spec.n_min = 2;
  opts.spec.n_max = 3;
  opts.spec.b_min = 2;
  opts.spec.b_max = 3;
  const Run r = invoke(run_grid, opts);
  CHECK(r.code == 0);
  CHECK(r.out ==
        "n,b,pd_num,pd_den,pd_float\n"
        "2,2,2,3,0.66666666666666663\n"
        "2,3,3,6,0.5\n"
        "3,2,4,4,1.0\n"
        "3,3,9,10,0.90000000000000002\n");

  const Run again = invoke(run_grid, opts);
  CHECK(again.out == r.out);
}

TEST_CASE("grid contains the worked row at (5, 10)") {
  GridOptions opts;
  opts.spec.n_min = 5;
  opts.spec.n_max = 5;
  opts.spec.b_min = 10;
  opts.spec.b_max = 10;
  const Run r = invoke(run_grid, opts);
  CHECK(r.out.find("5,10,550,2002,0.27472527472527475\n") != std::string::npos);
}

TEST_CASE("grid float mode leaves the integer columns empty") {
  GridOptions opts;
  opts.spec.n_min = 5;
  opts.spec.n_max = 5;
  opts.spec.b_min = 10;
  opts.spec.b_max = 10;
  opts.spec.mode = GridMode::floating;
  const Run r = invoke(run_grid, opts);
  CHECK(r.code == 0);
  CHECK(r.out ==
        "n,b,pd_num,pd_den,pd_float\n"
        "5,10,,,0.27472527472527475\n");
}

TEST_CASE("grid JSON parses and mirrors the CSV data") {
  GridOptions opts;
  opts.spec.n_min = 2;
  opts.spec.n_max = 3;
  opts.spec.b_min = 2;
  opts.spec.b_max = 3;
  opts.spec.format = GridFormat::json;
  const Run r = invoke(run_grid, opts);
  CHECK(r.code == 0);

  const nlohmann::json doc = nlohmann::json::parse(r.out);
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 4);
  CHECK(doc[0]["n"] == 2);
  CHECK(doc[0]["b"] == 2);
  CHECK(doc[0]["num"] == 2);
  CHECK(doc[0]["den"] == 3);
  CHECK(doc[0]["pd"] == doctest::Approx(2.0 / 3.0));
  CHECK(doc[2]["pd"] == 1.0);
}

TEST_CASE("grid JSON switches to decimal strings past the 53-bit safe range") {
  GridOptions opts;
  opts.spec.n_min = 200;
  opts.spec.n_max = 200;
  opts.spec.b_min = 50;
  opts.spec.b_max = 50;
  opts.spec.format = GridFormat::json;
  const Run r = invoke(run_grid, opts);
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  REQUIRE(doc.size() == 1);
  CHECK(doc[0]["num"].is_string());
  CHECK(doc[0]["den"].is_string());
  // C(249, 49): far beyond 2^53, still an exact decimal integer string.
  const std::string den = doc[0]["den"].get<std::string>();
  CHECK(den.size() > 16);
}

TEST_CASE("grid JSON float mode uses nulls for the integer fields") {
  GridOptions opts;
  opts.spec.n_min = 2;
  opts.spec.n_max = 2;
  opts.spec.b_min = 2;
  opts.spec.b_max = 2;
  opts.spec.mode = GridMode::floating;
  opts.spec.format = GridFormat::json;
  const Run r = invoke(run_grid, opts);
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc[0]["num"].is_null());
  CHECK(doc[0]["den"].is_null());
  CHECK(doc[0]["pd"] == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("grid writes to a file when asked and reports unreachable paths") {
  GridOptions opts;
  opts.spec.n_min = 2;
  opts.spec.n_max = 2;
  opts.spec.b_min = 2;
  opts.spec.b_max = 3;
  opts.out_path = "grid_test_tmp.csv";
  const Run r = invoke(run_grid, opts);
  CHECK(r.code == 0);
  std::ifstream in(opts.out_path, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream content;
  content << in.rdbuf();
  in.close();
  std::remove(opts.out_path.c_str());
  const Run direct = invoke(run_grid, GridOptions{opts.spec, ""});
  CHECK(content.str() == direct.out);

  GridOptions bad = opts;
  bad.out_path = "no_such_dir/grid.csv";
  const Run fail = invoke(run_grid, bad);
  CHECK(fail.code == 2);
  CHECK(fail.err.find("no_such_dir/grid.csv") != std::string::npos);
}

TEST_CASE("grid validates its spec with exit 2") {
  GridOptions inverted;
  inverted.spec.n_min = 5;
  inverted.spec.n_max = 3;
  CHECK(invoke(run_grid, inverted).code == 2);

  GridOptions low;
  low.spec.n_min = 1;
  const Run r = invoke(run_grid, low);
  CHECK(r.code == 2);
  CHECK(r.err.find("n must be at least 2") != std::string::npos);

  GridOptions huge;
  huge.spec.n_min = 2;
  huge.spec.n_max = 2001;
  huge.spec.b_min = 2;
  huge.spec.b_max = 2001;
  const Run big = invoke(run_grid, huge);
  CHECK(big.code == 2);
  CHECK(big.err.find("cap") != std::string::npos);
}

TEST_CASE("converge reports clean monotonicity and the limit") {
  ConvergeOptions opts;
  opts.b = 2;
  opts.k_max = 6;
  const Run r = invoke(run_converge, opts);
  CHECK(r.code == 0);
  CHECK(r.out.find("monotonicity violations: none") != std::string::npos);
  CHECK(r.out.find("limit = 1/2 \xE2\x89\x88 0.5") != std::string::npos);
  CHECK(r.out.find("0.66666666666666663") != std::string::npos);  // k=1 density
  CHECK(r.out.find("0.90000000000000002") != std::string::npos);  // k=1 delta
}

TEST_CASE("converge odd binary case is flat at 1") {
  ConvergeOptions opts;
  opts.b = 2;
  opts.parity = Parity::odd;
  opts.k_max = 5;
  const Run r = invoke(run_converge, opts);
  CHECK(r.code == 0);
  CHECK(r.out.find("monotonicity violations: none") != std::string::npos);
  CHECK(r.out.find("limit = 1 \xE2\x89\x88 1.0") != std::string::npos);
}

TEST_CASE("converge validates parameters") {
  ConvergeOptions bad_b;
  bad_b.b = 1;
  CHECK(invoke(run_converge, bad_b).code == 2);

  ConvergeOptions bad_k;
  bad_k.b = 3;
  bad_k.k_max = 0;
  CHECK(invoke(run_converge, bad_k).code == 2);

  ConvergeOptions too_far;
  too_far.b = 3;
  too_far.k_max = 600000;  // n would reach 1.2e6
  const Run r = invoke(run_converge, too_far);
  CHECK(r.code == 2);
  CHECK(r.err.find("exact-mode cap") != std::string::npos);
}

TEST_CASE("profiles table matches the worked partition classes") {
  const Run r = invoke(run_profiles, ProfilesOptions{5, 10, 120});
  CHECK(r.code == 0);
  CHECK(r.out.find("1+1+1+1+1") != std::string::npos);
  CHECK(r.out.find("252") != std::string::npos);
  CHECK(r.out.find("840") != std::string::npos);
  CHECK(r.out.find("palindromic 550 of 2002") != std::string::npos);

  const Run tiny = invoke(run_profiles, ProfilesOptions{2, 2, 120});
  CHECK(tiny.code == 0);
  CHECK(tiny.out.find("1+1") != std::string::npos);
  CHECK(tiny.out.find("palindromic 2 of 3") != std::string::npos);
}

TEST_CASE("profiles enforces the partition cap with exit 2") {
  const Run r = invoke(run_profiles, ProfilesOptions{121, 3, 120});
  CHECK(r.code == 2);
  CHECK(r.err.find("partition cap exceeded") != std::string::npos);

  const Run ok = invoke(run_profiles, ProfilesOptions{121, 3, 121});
  CHECK(ok.code == 0);
}

TEST_CASE("sample reports all fields and is deterministic per seed") {
  SampleOptions opts;
  opts.n = 3;
  opts.b = 2;
  opts.draws = 4000;
  opts.seed = 42;
  const Run r = invoke(run_sample, opts);
  CHECK(r.code == 0);
  CHECK(r.out.find("space    : n=3 b=2") != std::string::npos);
  CHECK(r.out.find("model    : uniform-multiset") != std::string::npos);
  CHECK(r.out.find("draws    : 4000") != std::string::npos);
  CHECK(r.out.find("hits     : 4000") != std::string::npos);
  CHECK(r.out.find("estimate : 1.0") != std::string::npos);
  CHECK(r.out.find("seed     : 42") != std::string::npos);

  const Run again = invoke(run_sample, opts);
  CHECK(again.out == r.out);

  opts.model = sampler::Model::uniform_picks;
  const Run picks = invoke(run_sample, opts);
  CHECK(picks.out.find("model    : uniform-picks") != std::string::npos);
  CHECK(picks.out.find("estimate : 1.0") != std::string::npos);
}

TEST_CASE("sample validates draws and parameters") {
  SampleOptions opts;
  opts.n = 5;
  opts.b = 10;
  opts.draws = 0;
  const Run r = invoke(run_sample, opts);
  CHECK(r.code == 2);
  CHECK(r.err.find("draws") != std::string::npos);

  opts.draws = 10;
  opts.n = 1;
  CHECK(invoke(run_sample, opts).code == 2);
}
