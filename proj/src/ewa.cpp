#include "ell1/ewa.hpp"

namespace ell1 {

EwaState::EwaState(long K_, double eta_, double Y_clip_)
    : K(K_), eta(eta_), Y_clip(Y_clip_), cum_loss(Vector::Zero(K_)) {
  if (K < 1) throw spec_error("EwaState: need at least one expert");
  if (!(eta > 0)) throw spec_error("EwaState: eta must be positive");
  if (Y_clip < 0) throw spec_error("EwaState: negative clipping radius");
}

Vector ewa_weights(const EwaState& state) {
  Vector a = -state.eta * state.cum_loss;
  a.array() -= a.maxCoeff();
  Vector w = a.array().exp();
  return w / w.sum();
}

double ewa_predict(const EwaState& state, const Vector& expert_predictions) {
  if (expert_predictions.size() != state.K)
    throw spec_error("ewa_predict: expert count mismatch");
  const Vector w = ewa_weights(state);
  double out = 0.0;
  for (long k = 0; k < state.K; ++k)
    out += w[k] * clip(expert_predictions[k], state.Y_clip);
  return out;
}

void ewa_feed(EwaState& state, const Vector& expert_predictions, double y) {
  if (expert_predictions.size() != state.K)
    throw spec_error("ewa_feed: expert count mismatch");
  if (!std::isfinite(y) || !expert_predictions.allFinite())
    throw spec_error("ewa_feed: non-finite inputs");
  for (long k = 0; k < state.K; ++k) {
    const double r = y - clip(expert_predictions[k], state.Y_clip);
    state.cum_loss[k] += r * r;
  }
}

}  // namespace ell1
