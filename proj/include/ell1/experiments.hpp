#pragma once

#include "ell1/comparator.hpp"
#include "ell1/core.hpp"
#include "ell1/sequences.hpp"

#include <functional>
#include <iosfwd>
#include <memory>

namespace ell1 {

struct ForecasterSpec {
  std::string id = "adaptive-eg";  // null | adaptive-eg | leg | maurey |
                                   // scaling-leg | fully-adaptive
  double U = 1.0;      // ball radius (and the comparator radius)
  double alpha = 2.0;  // scoring exponent for leg
  double k = 2.0;      // grid growth exponent of fully-adaptive
  double c = 0.0;      // scaling constant; 0 selects the default
  double c_prime = -1.0;
};

struct StreamSpec {
  std::string kind = "uniform";  // uniform | sparse | sinusoidal | file
  StreamConfig cfg;
  long sparsity = 1;
  double noise = 0.0;
  double gamma = 1.0;
  double sigma = 0.0;
  std::string path;  // kind == "file"
};

struct ExperimentSpec {
  ForecasterSpec forecaster;
  StreamSpec stream;
  std::vector<std::string> checks;  // bound ids, see run_experiment
  std::string trace_path;
  std::string summary_path;
};

struct BoundCheck {
  std::string id;
  double lhs = 0.0;    // realized quantity the bound must dominate
  double value = 0.0;  // bound value (including the comparator-gap slack)
  bool pass = false;
};

struct ExperimentResult {
  Stream rounds;
  RegretTrace trace{0};
  StreamBounds realized;
  ComparatorResult comparator;
  double regret = 0.0;
  std::vector<BoundCheck> checks;
  std::string summary;
  int exit_code = 0;  // 0 ok, 1 bound violation
};

Stream make_stream(const StreamSpec& spec);
std::unique_ptr<Forecaster> make_forecaster(const ForecasterSpec& spec, long d,
                                            double X, double Y, long T);

/// Run a forecaster over a stream, certify the comparator, evaluate the
/// requested bound checks, and (optionally) write the trace CSV and summary.
/// Bound ids: minimax, eg-gradient, eg-square, leg-alpha, leg-uniform, scaling.
ExperimentResult run_experiment(const ExperimentSpec& spec);

/// Trace schema `t,y,yhat,loss,cumloss,comploss,regret,bound`; the comploss
/// and bound columns repeat per row, 17 significant digits throughout.
void write_trace_csv(std::ostream& out, const Stream& rounds, const RegretTrace& trace,
                     double comparator_loss, double bound);

struct SweepSpec {
  long d = 1;
  double Y = 1.0;
  std::vector<double> kappas;
  long trials = 3;
  std::uint64_t seed = 1;
  std::string forecaster = "maurey";
};

struct SweepRow {
  double kappa = 0.0;
  long T = 0;
  double mean_regret = 0.0;
  double bound = 0.0;
};

/// For each kappa, instantiate U = 1, T = ceil((2 d kappa Y)^2) and
/// X = 2 d kappa Y / sqrt(T) (so the target kappa is hit exactly with an
/// integer horizon), average realized regret over seeded trials, and emit the
/// regime bound next to it.
std::vector<SweepRow> sweep_kappa(const SweepSpec& spec);
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

/// Trial parallelism cap: ELL1_THREADS when set, machine parallelism otherwise.
long thread_budget();
void parallel_for(long n, const std::function<void(long)>& fn);

}  // namespace ell1
