// Command-line harness: run forecasters on generated or file-backed streams,
// check the closed-form regret bounds, sweep the kappa regime picture, and
// dump reproducible stream/trace CSVs.
//
// Exit codes: 0 all checks pass, 1 bound violation, 2 spec/regime error,
// 3 I/O error.

#include "CLI11.hpp"

#include "ell1/experiments.hpp"
#include "ell1/sequences.hpp"
#include "ell1/stream_io.hpp"
#include "ell1/verify.hpp"

#include <fstream>
#include <iostream>

namespace {

int cmd_gen(const ell1::StreamSpec& spec, const std::string& out_path) {
  const ell1::Stream rounds = ell1::make_stream(spec);
  if (out_path == "-")
    ell1::write_stream_csv(std::cout, rounds);
  else
    ell1::write_stream_csv(out_path, rounds);
  return 0;
}

int cmd_run(const ell1::ExperimentSpec& spec) {
  const ell1::ExperimentResult result = ell1::run_experiment(spec);
  std::cout << result.summary;
  return result.exit_code;
}

int cmd_sweep(const ell1::SweepSpec& spec, const std::string& out_path) {
  const auto rows = ell1::sweep_kappa(spec);
  if (out_path.empty() || out_path == "-") {
    ell1::write_sweep_csv(std::cout, rows);
  } else {
    std::ofstream out(out_path);
    if (!out) throw ell1::io_error("cannot open for writing: " + out_path);
    ell1::write_sweep_csv(out, rows);
    if (!out) throw ell1::io_error("write failed: " + out_path);
  }
  return 0;
}

int cmd_verify(const std::string& suite) {
  const ell1::verify::Suite results = ell1::verify::run_suite(suite);
  bool all_pass = true;
  for (const auto& check : results) {
    std::cout << (check.pass ? "PASS" : "FAIL") << ' ' << check.name << ": "
              << check.detail << "\n";
    all_pass = all_pass && check.pass;
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"online linear regression on l1 balls"};
  app.require_subcommand(1);
  app.set_config("--config", "", "read options from a `key = value` file");

  ell1::StreamSpec stream;
  const auto add_stream_options = [&stream](CLI::App* cmd) {
    cmd->add_option("--stream", stream.kind,
                    "uniform | sparse | sinusoidal | file")
        ->default_val("uniform");
    cmd->add_option("--d", stream.cfg.d, "input dimension")->default_val(1);
    cmd->add_option("--T", stream.cfg.T, "horizon")->default_val(100);
    cmd->add_option("--X", stream.cfg.X, "input sup-norm bound")->default_val(1.0);
    cmd->add_option("--Y", stream.cfg.Y, "observation bound")->default_val(1.0);
    cmd->add_option("--seed", stream.cfg.seed, "stream seed")->default_val(1);
    cmd->add_option("--sparsity", stream.sparsity, "support size (sparse)")
        ->default_val(1);
    cmd->add_option("--noise", stream.noise, "noise level (sparse)")->default_val(0.0);
    cmd->add_option("--gamma", stream.gamma, "signal level (sinusoidal)")
        ->default_val(1.0);
    cmd->add_option("--sigma", stream.sigma, "noise level (sinusoidal)")
        ->default_val(0.0);
    cmd->add_option("--input", stream.path, "stream CSV path (file)");
  };

  // gen
  auto* gen = app.add_subcommand("gen", "dump a generated stream as CSV");
  add_stream_options(gen);
  std::string gen_out = "-";
  gen->add_option("--out", gen_out, "output path, or - for stdout");

  // run
  ell1::ExperimentSpec run_spec;
  auto* run = app.add_subcommand("run", "run a forecaster and check bounds");
  add_stream_options(run);
  run->add_option("--forecaster", run_spec.forecaster.id,
                  "null | adaptive-eg | leg | maurey | scaling-leg | fully-adaptive")
      ->default_val("adaptive-eg");
  run->add_option("--U", run_spec.forecaster.U, "ball / comparator radius")
      ->default_val(1.0);
  run->add_option("--alpha", run_spec.forecaster.alpha, "loss exponent (leg)")
      ->default_val(2.0);
  run->add_option("--k", run_spec.forecaster.k, "grid growth exponent (fully-adaptive)")
      ->default_val(2.0);
  run->add_option("--c", run_spec.forecaster.c, "scaling constant (0 = default)")
      ->default_val(0.0);
  run->add_option("--c-prime", run_spec.forecaster.c_prime,
                  "scaling additive constant (<0 = default)")
      ->default_val(-1.0);
  run->add_option("--check", run_spec.checks,
                  "bound checks: minimax eg-gradient eg-square leg-alpha "
                  "leg-uniform scaling");
  run->add_option("--trace", run_spec.trace_path, "per-step trace CSV path");
  run->add_option("--summary", run_spec.summary_path, "summary text path");

  // sweep-kappa
  ell1::SweepSpec sweep_spec;
  std::string sweep_out;
  auto* sweep = app.add_subcommand("sweep-kappa", "regime picture over kappa");
  sweep->add_option("--kappa", sweep_spec.kappas, "kappa values")->required();
  sweep->add_option("--d", sweep_spec.d, "dimension")->default_val(1);
  sweep->add_option("--Y", sweep_spec.Y, "observation bound")->default_val(1.0);
  sweep->add_option("--trials", sweep_spec.trials, "trials per kappa")->default_val(3);
  sweep->add_option("--seed", sweep_spec.seed, "base seed")->default_val(1);
  sweep->add_option("--forecaster", sweep_spec.forecaster,
                    "maurey | adaptive-eg | leg | null")
      ->default_val("maurey");
  sweep->add_option("--out", sweep_out, "output path, or - for stdout");

  // verify
  std::string suite;
  auto* verify = app.add_subcommand("verify", "run a named acceptance suite");
  verify->add_option("--suite", suite, "suite id (see ell1 verify --help-suites)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return cmd_gen(stream, gen_out);
    if (run->parsed()) {
      run_spec.stream = stream;
      return cmd_run(run_spec);
    }
    if (sweep->parsed()) return cmd_sweep(sweep_spec, sweep_out);
    if (verify->parsed()) return cmd_verify(suite);
  } catch (const ell1::io_error& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 3;
  } catch (const ell1::spec_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
