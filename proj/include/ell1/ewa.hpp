#pragma once

#include "ell1/core.hpp"

namespace ell1 {

/// Exponentially weighted average forecaster over K experts, with expert
/// predictions clipped to [-Y_clip, Y_clip] before mixing and before the
/// square losses that drive the weights.  The exp-concavity guarantee needs
/// eta <= 1/(8 Y_clip^2).
struct EwaState {
  long K = 0;
  double eta = 0.0;
  double Y_clip = 0.0;
  Vector cum_loss;  // cumulative clipped square loss per expert

  EwaState(long K, double eta, double Y_clip);
};

/// Weights proportional to exp(-eta * cum_loss), via max-subtracted softmax.
Vector ewa_weights(const EwaState& state);

/// sum_k p_k [pred_k]_Y; result lies in [-Y_clip, Y_clip].
double ewa_predict(const EwaState& state, const Vector& expert_predictions);

/// cum_loss_k += (y - [pred_k]_Y)^2.
void ewa_feed(EwaState& state, const Vector& expert_predictions, double y);

}  // namespace ell1
