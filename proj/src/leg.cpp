#include "ell1/leg.hpp"

namespace ell1 {

LegForecaster::LegForecaster(double U, long d, double alpha)
    : eg_(U, d), B_(alpha), alpha_(alpha) {}

double LegForecaster::do_step(const Vector& x) {
  if (x.size() != eg_.d) throw spec_error("leg: input dimension drift");
  point_ = eg_point(eg_);
  return clip(point_.dot(x), B_.value());
}

void LegForecaster::do_feed(const Vector& x, double y) {
  const LipLoss loss(y, x, B_.value(), alpha_);
  // Inactive rounds feed a zero gradient; the weight update still runs.
  eg_update(eg_, lip_gradient(loss, point_));
  B_.observe(y);
}

std::vector<LipLoss> lip_losses_for_stream(const Stream& rounds, double alpha) {
  std::vector<LipLoss> losses;
  losses.reserve(rounds.size());
  DyadicThreshold B(alpha);
  for (const Round& r : rounds) {
    losses.emplace_back(r.y, r.x, B.value(), alpha);
    B.observe(r.y);
  }
  return losses;
}

ComparatorResult min_lip_loss_l1(const Stream& rounds, double U, double alpha,
                                 double tol) {
  const auto losses = lip_losses_for_stream(rounds, alpha);
  ResidualObjective objective(
      rounds,
      [&losses](long t, double v) {
        const LipLoss& l = losses[t];
        return l.active ? lip_value(v, l.y, l.B, l.alpha) : 0.0;
      },
      [&losses](long t, double v) {
        const LipLoss& l = losses[t];
        return l.active ? lip_slope(v, l.y, l.B, l.alpha) : 0.0;
      });
  return minimize_on_l1_ball(objective, U, tol);
}

ComparatorResult min_lip_loss_l1(const Stream& rounds, double U, double alpha) {
  return min_lip_loss_l1(rounds, U, alpha, default_tolerance(rounds));
}

}  // namespace ell1
