#pragma once

#include "ell1/adaptive_eg.hpp"
#include "ell1/comparator.hpp"
#include "ell1/lipschitz.hpp"

namespace ell1 {

/// Lipschitzifying exponentiated-gradient forecaster: the adaptive EG update
/// run on the Lipschitzified alpha-losses, predicting [u_hat_t . x_t]_{B_t}
/// with the threshold held strictly causal (B_t is set before y_t arrives).
class LegForecaster final : public Forecaster {
 public:
  LegForecaster(double U, long d, double alpha);

  const EgState& state() const { return eg_; }
  double threshold() const { return B_.value(); }
  double alpha() const { return alpha_; }
  std::optional<Vector> comparator_point() const override { return eg_point(eg_); }
  std::string name() const override { return "leg"; }

 protected:
  double do_step(const Vector& x) override;
  void do_feed(const Vector& x, double y) override;

 private:
  EgState eg_;
  DyadicThreshold B_;
  double alpha_;
  Vector point_;
};

/// The per-round Lipschitzified losses a stream induces, with the same causal
/// thresholds the forecaster would use (they depend only on the y history).
std::vector<LipLoss> lip_losses_for_stream(const Stream& rounds, double alpha);

/// Certified min over B1(U) of the summed Lipschitzified losses.
ComparatorResult min_lip_loss_l1(const Stream& rounds, double U, double alpha,
                                 double tol);
ComparatorResult min_lip_loss_l1(const Stream& rounds, double U, double alpha);

}  // namespace ell1
