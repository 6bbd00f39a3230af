#include "ell1/experiments.hpp"

#include "ell1/adaptive_eg.hpp"
#include "ell1/bounds.hpp"
#include "ell1/leg.hpp"
#include "ell1/maurey.hpp"
#include "ell1/scaling.hpp"
#include "ell1/stream_io.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

namespace ell1 {

Stream make_stream(const StreamSpec& spec) {
  if (spec.kind == "uniform") return gen_uniform_bounded(spec.cfg);
  if (spec.kind == "sparse")
    return gen_sparse_linear(spec.cfg, spec.sparsity, spec.noise).rounds;
  if (spec.kind == "sinusoidal") {
    // Planted vector e_1: realizable up to the noise term.
    Vector u = Vector::Zero(spec.cfg.d);
    u[0] = 1.0;
    return gen_sinusoidal_model(spec.cfg, u, spec.gamma, spec.sigma);
  }
  if (spec.kind == "file") return read_stream_csv(spec.path);
  throw spec_error("unknown stream kind: " + spec.kind);
}

std::unique_ptr<Forecaster> make_forecaster(const ForecasterSpec& spec, long d,
                                            double X, double Y, long T) {
  if (spec.id == "null") return std::make_unique<NullForecaster>();
  if (spec.id == "adaptive-eg") return std::make_unique<AdaptiveEgSquare>(spec.U, d);
  if (spec.id == "leg")
    return std::make_unique<LegForecaster>(spec.U, d, spec.alpha);
  if (spec.id == "maurey")
    return std::make_unique<MaureyForecaster>(spec.U, X, Y, T, d);
  if (spec.id == "scaling-leg") {
    const double c = spec.c > 0 ? spec.c : bounds::scaling_default_c();
    const UGrid grid = build_grid(X, Y, T, d, c);
    return std::make_unique<ScalingForecaster>(
        grid, [d](double U) { return std::make_unique<LegForecaster>(U, d, 2.0); }, Y);
  }
  if (spec.id == "fully-adaptive")
    return std::make_unique<FullyAdaptiveForecaster>(d, spec.k, spec.c);
  throw spec_error("unknown forecaster id: " + spec.id);
}

namespace {

struct GradStats {
  bool present = false;
  double sq_sum = 0.0;
  double max = 0.0;
};

GradStats gradient_stats(const Forecaster& f) {
  if (const auto* eg = dynamic_cast<const AdaptiveEgSquare*>(&f))
    return {true, eg->state().grad_sq_sum, eg->state().grad_max};
  if (const auto* leg = dynamic_cast<const LegForecaster*>(&f))
    return {true, leg->state().grad_sq_sum, leg->state().grad_max};
  return {};
}

}  // namespace

void write_trace_csv(std::ostream& out, const Stream& rounds, const RegretTrace& trace,
                     double comparator_loss, double bound) {
  out << "t,y,yhat,loss,cumloss,comploss,regret,bound\n";
  for (size_t t = 0; t < rounds.size(); ++t) {
    out << (t + 1) << ',' << format_g17(rounds[t].y) << ','
        << format_g17(trace.prediction[t]) << ',' << format_g17(trace.loss[t]) << ','
        << format_g17(trace.cum_loss[t]) << ',' << format_g17(comparator_loss) << ','
        << format_g17(trace.cum_loss[t] - comparator_loss) << ',' << format_g17(bound)
        << "\n";
  }
}

ExperimentResult run_experiment(const ExperimentSpec& spec) {
  ExperimentResult result;
  result.rounds = make_stream(spec.stream);
  result.realized = StreamBounds::from_stream(result.rounds);
  const long d = result.rounds.front().x.size();
  if (d < 1) throw spec_error("run: zero-dimensional stream");

  // Construction-time envelope: the promised generator bounds where they
  // exist, the realized maxima otherwise.
  StreamBounds cons = result.realized;
  if (spec.stream.kind == "uniform" || spec.stream.kind == "sparse") {
    cons.X = spec.stream.cfg.X;
    cons.Y = spec.stream.cfg.Y;
  }

  auto forecaster = make_forecaster(spec.forecaster, d, cons.X, cons.Y, cons.T);
  const LossSpec loss_spec(spec.forecaster.id == "leg" ? spec.forecaster.alpha : 2.0);
  result.trace = run_stream(*forecaster, result.rounds, loss_spec);

  const double U = spec.forecaster.U;
  result.comparator =
      loss_spec.alpha == 2.0
          ? min_square_loss_l1(result.rounds, U)
          : min_alpha_loss_l1(result.rounds, U, loss_spec);
  result.trace.fill_comparator(result.rounds, result.comparator.u_star, loss_spec);
  result.regret = compute_regret(result.trace, result.comparator.loss);

  const GradStats grads = gradient_stats(*forecaster);
  const double gap = result.comparator.gap;
  const double X = result.realized.X, Y = result.realized.Y;
  const long T = result.realized.T;
  const double cum = result.trace.cum_loss.empty() ? 0.0 : result.trace.cum_loss.back();

  for (const std::string& id : spec.checks) {
    BoundCheck check;
    check.id = id;
    if (id == "minimax") {
      check.lhs = result.regret;
      check.value = bounds::minimax_regret_bound(U, cons.X, cons.Y, T, d) + gap;
    } else if (id == "eg-gradient") {
      if (!grads.present)
        throw spec_error("check eg-gradient: forecaster exposes no gradient statistics");
      check.lhs = result.regret;
      check.value = bounds::eg_gradient_bound(U, grads.sq_sum, grads.max, d) + gap;
    } else if (id == "eg-square") {
      check.lhs = result.regret;
      check.value =
          bounds::eg_square_loss_bound(U, X, Y, T, d, result.comparator.loss) + gap;
    } else if (id == "leg-alpha") {
      const ComparatorResult lip =
          min_lip_loss_l1(result.rounds, U, loss_spec.alpha);
      check.lhs = cum;
      check.value =
          bounds::leg_alpha_loss_bound(U, X, Y, loss_spec.alpha, d, lip.loss) + lip.gap;
    } else if (id == "leg-uniform") {
      check.lhs = result.regret;
      check.value = bounds::leg_square_loss_uniform_bound(U, X, Y, T, d) + gap;
    } else if (id == "scaling") {
      const double c = spec.forecaster.c > 0 ? spec.forecaster.c
                                             : bounds::scaling_default_c();
      const double cp = spec.forecaster.c_prime >= 0
                            ? spec.forecaster.c_prime
                            : bounds::scaling_default_c_prime();
      check.lhs = result.regret;
      check.value = bounds::scaling_bound(U, cons.X, cons.Y, T, d, c, cp) + gap;
    } else {
      throw spec_error("unknown bound check: " + id);
    }
    check.pass = check.lhs <= check.value;
    result.checks.push_back(check);
  }

  for (const BoundCheck& c : result.checks)
    if (!c.pass) result.exit_code = 1;

  std::ostringstream summary;
  summary << "forecaster: " << forecaster->name() << " (U = " << format_g17(U) << ")\n";
  summary << "stream: " << spec.stream.kind << " d=" << d << " T=" << T
          << " seed=" << spec.stream.cfg.seed << "\n";
  summary << "realized: X = " << format_g17(X) << "  Y = " << format_g17(Y) << "\n";
  summary << "comparator: loss = " << format_g17(result.comparator.loss)
          << "  gap <= " << format_g17(gap)
          << "  l1(u*) = " << format_g17(result.comparator.u_star.lpNorm<1>()) << "\n";
  summary << "cumulative loss: " << format_g17(cum) << "\n";
  summary << "regret: " << format_g17(result.regret) << "\n";
  for (const BoundCheck& c : result.checks)
    summary << "check " << c.id << ": " << format_g17(c.lhs)
            << " <= " << format_g17(c.value) << (c.pass ? "  PASS" : "  FAIL") << "\n";
  summary << "exit: " << result.exit_code << "\n";
  result.summary = summary.str();

  if (!spec.trace_path.empty()) {
    std::ofstream out(spec.trace_path);
    if (!out) throw io_error("cannot open for writing: " + spec.trace_path);
    const double bound_col =
        result.checks.empty() ? std::nan("") : result.checks.front().value;
    write_trace_csv(out, result.rounds, result.trace, result.comparator.loss, bound_col);
    if (!out) throw io_error("write failed: " + spec.trace_path);
  }
  if (!spec.summary_path.empty()) {
    std::ofstream out(spec.summary_path);
    if (!out) throw io_error("cannot open for writing: " + spec.summary_path);
    out << result.summary;
    if (!out) throw io_error("write failed: " + spec.summary_path);
  }
  return result;
}

std::vector<SweepRow> sweep_kappa(const SweepSpec& spec) {
  if (spec.kappas.empty()) throw spec_error("sweep: no kappa values");
  if (spec.trials < 1) throw spec_error("sweep: need at least one trial");
  for (double k : spec.kappas)
    if (!(k > 0)) throw spec_error("sweep: kappa values must be positive");

  std::vector<SweepRow> rows(spec.kappas.size());
  const long n = static_cast<long>(spec.kappas.size()) * spec.trials;
  std::vector<double> regrets(n, 0.0);

  parallel_for(n, [&](long i) {
    const long row = i / spec.trials;
    const double kappa = spec.kappas[row];
    const double s = 2.0 * spec.d * kappa * spec.Y;
    const long T = std::max(1L, static_cast<long>(std::ceil(s * s - 1e-12)));
    const double X = s / std::sqrt(double(T));
    const double U = 1.0;

    StreamConfig cfg;
    cfg.d = spec.d;
    cfg.T = T;
    cfg.X = X;
    cfg.Y = spec.Y;
    cfg.seed = spec.seed + 1000003ULL * std::uint64_t(i);
    const Stream rounds = gen_uniform_bounded(cfg);

    std::unique_ptr<Forecaster> f;
    if (spec.forecaster == "maurey") {
      const long m = select_m_unchecked(U, X, spec.Y, T, spec.d);
      f = std::make_unique<MaureyForecaster>(enumerate_grid(spec.d, m, U), spec.Y);
    } else {
      f = make_forecaster(ForecasterSpec{spec.forecaster, U}, spec.d, X, spec.Y, T);
    }
    const RegretTrace trace = run_stream(*f, rounds);
    regrets[i] = compute_regret(trace, min_square_loss_l1(rounds, U).loss);
  });

  for (size_t row = 0; row < spec.kappas.size(); ++row) {
    const double kappa = spec.kappas[row];
    const double s = 2.0 * spec.d * kappa * spec.Y;
    const long T = std::max(1L, static_cast<long>(std::ceil(s * s - 1e-12)));
    const double X = s / std::sqrt(double(T));
    double mean = 0.0;
    for (long trial = 0; trial < spec.trials; ++trial)
      mean += regrets[long(row) * spec.trials + trial];
    mean /= double(spec.trials);
    rows[row] = {kappa, T, mean,
                 bounds::regime_bound(bounds::kappa_regime(1.0, X, spec.Y, T, spec.d),
                                      spec.d, spec.Y)};
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "kappa,T,mean_regret,bound\n";
  for (const SweepRow& r : rows)
    out << format_g17(r.kappa) << ',' << r.T << ',' << format_g17(r.mean_regret) << ','
        << format_g17(r.bound) << "\n";
}

long thread_budget() {
  if (const char* env = std::getenv("ELL1_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? long(hw) : 1L;
}

void parallel_for(long n, const std::function<void(long)>& fn) {
  const long workers = std::min(thread_budget(), n);
  if (workers <= 1) {
    for (long i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<long> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (long w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      for (;;) {
        const long i = next.fetch_add(1);
        if (i >= n) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace ell1
