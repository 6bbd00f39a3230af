#include "ell1/core.hpp"

#include <cmath>

namespace ell1 {

StreamBounds StreamBounds::from_stream(const Stream& rounds) {
  StreamBounds b;
  b.T = static_cast<long>(rounds.size());
  for (const Round& r : rounds) {
    b.X = std::max(b.X, r.x.size() > 0 ? r.x.lpNorm<Eigen::Infinity>() : 0.0);
    b.Y = std::max(b.Y, std::abs(r.y));
  }
  return b;
}

double alpha_loss(double y, double p, const LossSpec& spec) noexcept {
  const double r = y - p;
  if (spec.alpha == 2.0) return r * r;
  return std::pow(std::abs(r), spec.alpha);
}

Vector square_loss_gradient(const Vector& u, const Round& round) {
  if (u.size() != round.x.size())
    throw spec_error("square_loss_gradient: dimension mismatch");
  return -2.0 * (round.y - u.dot(round.x)) * round.x;
}

double Forecaster::step(const Vector& x) {
  if (awaiting_feed_)
    throw std::logic_error("forecaster protocol: step called twice without feed");
  last_x_ = x;
  awaiting_feed_ = true;
  return do_step(x);
}

void Forecaster::feed(double y) {
  if (!awaiting_feed_)
    throw std::logic_error("forecaster protocol: feed called before step");
  do_feed(last_x_, y);
  awaiting_feed_ = false;
}

RegretTrace::RegretTrace(long T) : horizon(T) {
  if (T < 0) throw spec_error("RegretTrace: negative horizon");
  prediction.reserve(T);
  loss.reserve(T);
  cum_loss.reserve(T);
}

void RegretTrace::record(double pred, double step_loss) {
  if (complete()) throw std::logic_error("RegretTrace: record past the horizon");
  prediction.push_back(pred);
  loss.push_back(step_loss);
  cum_loss.push_back((cum_loss.empty() ? 0.0 : cum_loss.back()) + step_loss);
}

void RegretTrace::fill_comparator(const Stream& rounds, const Vector& u,
                                  const LossSpec& spec) {
  if (!complete() || static_cast<long>(rounds.size()) != horizon)
    throw spec_error("RegretTrace: comparator fill needs a complete matching trace");
  cum_comparator_loss.assign(horizon, 0.0);
  regret.assign(horizon, 0.0);
  double cum = 0.0;
  for (long t = 0; t < horizon; ++t) {
    cum += alpha_loss(rounds[t].y, u.dot(rounds[t].x), spec);
    cum_comparator_loss[t] = cum;
    regret[t] = cum_loss[t] - cum;
  }
}

double compute_regret(const RegretTrace& trace, double comparator_loss) {
  if (!trace.complete())
    throw spec_error("compute_regret: incomplete trace");
  const double total = trace.cum_loss.empty() ? 0.0 : trace.cum_loss.back();
  return total - comparator_loss;
}

RegretTrace run_stream(Forecaster& forecaster, const Stream& rounds,
                       const LossSpec& spec) {
  RegretTrace trace(static_cast<long>(rounds.size()));
  for (const Round& r : rounds) {
    const double pred = forecaster.step(r.x);
    trace.record(pred, alpha_loss(r.y, pred, spec));
    forecaster.feed(r.y);
  }
  return trace;
}

}  // namespace ell1
