#pragma once

#include "ell1/core.hpp"

#include <limits>

namespace ell1 {

/// Probability vector over the 2d signed vertices +U e_j / -U e_j of B1(U),
/// interleaved as (p+_1, p-_1, ..., p+_d, p-_d).
struct VertexWeights {
  Vector p;

  static VertexWeights uniform(long d);
  long dim() const { return p.size() / 2; }
};

/// Self-confident learning-rate state.  E_hat is the dyadic ratchet over the
/// max pairwise spread of the loss vectors seen so far (0 before any data),
/// V the cumulative weighted variance, and eta the rate for the NEXT round
/// (+inf sentinel while both statistics are degenerate).
struct TuningState {
  double range_max = 0.0;
  double E_hat = 0.0;
  double V = 0.0;
  double eta = std::numeric_limits<double>::infinity();
};

/// sqrt(2 (sqrt(2) - 1) / (e - 2)), the constant in the variance branch of eta.
double self_confident_rate_constant();

/// Smallest power of two >= x (exact, via the binary exponent); 0 for x <= 0.
double dyadic_ceil(double x);

/// State of the adaptive exponentiated-gradient forecaster over B1(U).
struct EgState {
  double U = 1.0;
  long d = 0;
  VertexWeights weights;
  TuningState tuning;
  Vector cum_z;  // per-vertex cumulative loss-vector sums
  std::optional<double> fixed_eta;
  double grad_sq_sum = 0.0;  // sum of ||grad||_inf^2 over fed gradients
  double grad_max = 0.0;     // max ||grad||_inf

  EgState(double U, long d);
};

/// The point u_hat = U sum_j (p+_j - p-_j) e_j; always in B1(U).
Vector eg_point(const EgState& state);

/// Loss vector (U g_j, -U g_j) interleaved over the 2d vertices.
Vector loss_vector(const Vector& grad, double U);

/// Advance V, the range ratchet E_hat, and the next-round eta with this
/// round's loss vector under the weights that produced the round's point.
TuningState update_tuning(TuningState tuning, const Vector& z,
                          const VertexWeights& weights);

/// One weight update with the gradient taken at eg_point(state).
void eg_update(EgState& state, const Vector& grad);

/// Square-loss instantiation: predicts u_hat_t . x_t and feeds the square
/// loss gradient back into the weight update.
class AdaptiveEgSquare final : public Forecaster {
 public:
  AdaptiveEgSquare(double U, long d);
  static AdaptiveEgSquare with_fixed_eta(double U, long d, double eta);

  const EgState& state() const { return state_; }
  std::optional<Vector> comparator_point() const override { return eg_point(state_); }
  std::string name() const override { return "adaptive-eg"; }

 protected:
  double do_step(const Vector& x) override;
  void do_feed(const Vector& x, double y) override;

 private:
  EgState state_;
  Vector point_;  // u_hat of the pending round
};

}  // namespace ell1
