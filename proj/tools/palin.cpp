#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

#include "palin/commands.hpp"
#include "palin/grid.hpp"
#include "palin/oracle.hpp"
#include "palin/sampler.hpp"
#include "palin/space.hpp"
#include "palin/verify.hpp"

namespace {

// Shared by pd and grid: pick exact (default) or float evaluation.
void add_mode_flags(CLI::App* cmd, bool& use_float) {
  auto* exact = cmd->add_flag("--exact", "exact rational arithmetic (default)");
  auto* flt = cmd->add_flag("--float", use_float, "floating-point product evaluation");
  exact->excludes(flt);
  flt->excludes(exact);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"palindromic density of multiset spaces"};
  app.require_subcommand(1);

  palin::cli::PdOptions pd_opts;
  auto* pd_cmd = app.add_subcommand("pd", "density of one space X_b^n");
  pd_cmd->add_option("n", pd_opts.n, "multiset cardinality")->required();
  pd_cmd->add_option("b", pd_opts.b, "alphabet size")->required();
  add_mode_flags(pd_cmd, pd_opts.use_float);

  palin::cli::VerifyOptions verify_opts;
  auto* verify_cmd =
      app.add_subcommand("verify", "cross-check closed forms against brute-force enumeration");
  verify_cmd->add_option("--max-n", verify_opts.max_n, "largest cardinality to sweep")
      ->envname("PALIN_MAX_N")
      ->capture_default_str();
  verify_cmd->add_option("--max-b", verify_opts.max_b, "largest alphabet size to sweep")
      ->envname("PALIN_MAX_B")
      ->capture_default_str();
  verify_cmd->add_option("--cap", verify_opts.cap, "enumeration cap (multisets per space)")
      ->envname("PALIN_CAP")
      ->capture_default_str();

  palin::cli::GridOptions grid_opts;
  bool grid_float = false;
  std::string grid_format = "csv";
  auto* grid_cmd = app.add_subcommand("grid", "density table over an (n, b) rectangle");
  grid_cmd->add_option("n_min", grid_opts.spec.n_min, "smallest cardinality")->required();
  grid_cmd->add_option("n_max", grid_opts.spec.n_max, "largest cardinality")->required();
  grid_cmd->add_option("b_min", grid_opts.spec.b_min, "smallest alphabet size")->required();
  grid_cmd->add_option("b_max", grid_opts.spec.b_max, "largest alphabet size")->required();
  add_mode_flags(grid_cmd, grid_float);
  grid_cmd->add_option("--format", grid_format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->envname("PALIN_FORMAT")
      ->capture_default_str();
  grid_cmd->add_option("--out", grid_opts.out_path, "output file (default stdout)")
      ->envname("PALIN_OUT");

  palin::cli::ConvergeOptions converge_opts;
  std::string converge_parity = "even";
  auto* converge_cmd =
      app.add_subcommand("converge", "density, step ratio, and tail gap as n grows");
  converge_cmd->add_option("b", converge_opts.b, "alphabet size")->required();
  converge_cmd->add_option("--parity", converge_parity, "parity of n")
      ->check(CLI::IsMember({"even", "odd"}))
      ->envname("PALIN_PARITY")
      ->capture_default_str();
  converge_cmd->add_option("--k-max", converge_opts.k_max, "rows: k = 1..k_max, n = 2k or 2k+1")
      ->envname("PALIN_K_MAX")
      ->capture_default_str();

  palin::cli::ProfilesOptions profiles_opts;
  auto* profiles_cmd =
      app.add_subcommand("profiles", "multiplicity profiles of X_b^n with class sizes");
  profiles_cmd->add_option("n", profiles_opts.n, "multiset cardinality")->required();
  profiles_cmd->add_option("b", profiles_opts.b, "alphabet size")->required();
  profiles_cmd->add_option("--cap", profiles_opts.partition_cap, "partition cap on n")
      ->envname("PALIN_CAP")
      ->capture_default_str();

  palin::cli::SampleOptions sample_opts;
  std::string sample_model = "uniform-multiset";
  auto* sample_cmd = app.add_subcommand("sample", "Monte Carlo density estimate");
  sample_cmd->add_option("n", sample_opts.n, "multiset cardinality")->required();
  sample_cmd->add_option("b", sample_opts.b, "alphabet size")->required();
  sample_cmd->add_option("--model", sample_model, "sampling distribution")
      ->check(CLI::IsMember({"uniform-multiset", "uniform-picks"}))
      ->envname("PALIN_MODEL")
      ->capture_default_str();
  sample_cmd->add_option("--draws", sample_opts.draws, "number of draws")
      ->envname("PALIN_DRAWS")
      ->capture_default_str();
  sample_cmd->add_option("--seed", sample_opts.seed, "RNG seed")
      ->envname("PALIN_SEED")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (app.got_subcommand(pd_cmd)) {
    return palin::cli::run_pd(pd_opts, std::cout, std::cerr);
  }
  if (app.got_subcommand(verify_cmd)) {
    return palin::cli::run_verify(verify_opts, std::cout, std::cerr);
  }
  if (app.got_subcommand(grid_cmd)) {
    grid_opts.spec.mode = grid_float ? palin::cli::GridMode::floating : palin::cli::GridMode::exact;
    grid_opts.spec.format =
        grid_format == "json" ? palin::cli::GridFormat::json : palin::cli::GridFormat::csv;
    return palin::cli::run_grid(grid_opts, std::cout, std::cerr);
  }
  if (app.got_subcommand(converge_cmd)) {
    converge_opts.parity = converge_parity == "odd" ? palin::Parity::odd : palin::Parity::even;
    return palin::cli::run_converge(converge_opts, std::cout, std::cerr);
  }
  if (app.got_subcommand(profiles_cmd)) {
    return palin::cli::run_profiles(profiles_opts, std::cout, std::cerr);
  }
  if (app.got_subcommand(sample_cmd)) {
    sample_opts.model = palin::sampler::model_from_string(sample_model);
    return palin::cli::run_sample(sample_opts, std::cout, std::cerr);
  }
  return 2;
}
