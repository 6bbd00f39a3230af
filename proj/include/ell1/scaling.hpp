#pragma once

#include "ell1/core.hpp"
#include "ell1/ewa.hpp"

#include <functional>
#include <memory>

namespace ell1 {

/// Dyadic grid of candidate l1-radii, strictly increasing, ratio exactly 2.
struct UGrid {
  std::vector<double> radii;

  long size() const { return static_cast<long>(radii.size()); }
};

/// Known-horizon grid: U_r = (Y/X) 2^r / sqrt(T ln(2d)) for r = 0..R,
/// R = max(0, ceil(log2(2T/c))).
UGrid build_grid(double X, double Y, long T, long d, double c);

/// Horizon-free grid at time t with growth exponent k > 1:
/// U_r = t^{-k} 2^r / sqrt(t ln(2d)) for r = 0..R'(t),
/// R'(t) = max(0, ceil(log2(2t/c))) + ceil(log2(t^{2k})).
UGrid build_adaptive_grid(long t, double k, long d, double c);

using SubForecasterFactory = std::function<std::unique_ptr<Forecaster>(double U)>;

/// Clipped exponentially weighted aggregation (eta = 1/(8Y^2)) of one
/// sub-forecaster per grid radius, each run on its own ball B1(U_r).
class ScalingForecaster final : public Forecaster {
 public:
  ScalingForecaster(const UGrid& grid, const SubForecasterFactory& factory, double Y);

  const UGrid& grid() const { return grid_; }
  const EwaState& aggregator() const { return ewa_; }
  std::string name() const override { return "scaling"; }

 protected:
  double do_step(const Vector& x) override;
  void do_feed(const Vector& x, double y) override;

 private:
  UGrid grid_;
  std::vector<std::unique_ptr<Forecaster>> subs_;
  EwaState ewa_;
  Vector preds_;
};

/// Fully automatic variant: no prior U, X, Y, or T.  The clipping radius is
/// the dyadic threshold ratchet over |y|, the aggregation rate is re-derived
/// as 1/(8 B_t^2), and the radius grid is an anchored dyadic set that only
/// grows, kept wide enough to cover the horizon-free grid at the current t.
/// Sub-forecasters spawned mid-stream start cold; a new expert's cumulative
/// aggregation loss starts at the current minimum among existing experts.
class FullyAdaptiveForecaster final : public Forecaster {
 public:
  explicit FullyAdaptiveForecaster(long d, double k = 2.0, double c = 0.0);

  std::vector<double> current_radii() const;
  std::string name() const override { return "fully-adaptive"; }

 protected:
  double do_step(const Vector& x) override;
  void do_feed(const Vector& x, double y) override;

 private:
  void grow_grid_for_round(long t);

  long d_;
  double k_;
  double c_;
  double anchor_;  // radius at exponent 0
  long r_lo_ = 0, r_hi_ = -1;  // current exponent range; empty before round 1
  std::vector<std::unique_ptr<Forecaster>> subs_;  // ordered by exponent
  std::vector<double> cum_loss_;
  double y_max_ = 0.0;
  double B_ = 0.0;  // dyadic clipping radius
  long t_ = 0;      // completed rounds
  Vector preds_;
};

}  // namespace ell1
