#include "ell1/adaptive_eg.hpp"

#include <cmath>

namespace ell1 {

VertexWeights VertexWeights::uniform(long d) {
  if (d < 1) throw spec_error("VertexWeights: dimension must be >= 1");
  VertexWeights w;
  w.p = Vector::Constant(2 * d, 1.0 / (2.0 * d));
  return w;
}

double self_confident_rate_constant() {
  return std::sqrt(2.0 * (std::sqrt(2.0) - 1.0) / (std::exp(1.0) - 2.0));
}

double dyadic_ceil(double x) {
  if (!(x > 0.0)) return 0.0;
  int e = 0;
  const double f = std::frexp(x, &e);  // x = f * 2^e, f in [0.5, 1)
  return (f == 0.5) ? std::ldexp(1.0, e - 1) : std::ldexp(1.0, e);
}

EgState::EgState(double U_, long d_)
    : U(U_), d(d_), weights(VertexWeights::uniform(d_)), cum_z(Vector::Zero(2 * d_)) {
  if (!(U > 0)) throw spec_error("EgState: radius must be positive");
}

Vector eg_point(const EgState& state) {
  Vector u(state.d);
  for (long j = 0; j < state.d; ++j)
    u[j] = state.U * (state.weights.p[2 * j] - state.weights.p[2 * j + 1]);
  return u;
}

Vector loss_vector(const Vector& grad, double U) {
  Vector z(2 * grad.size());
  for (long j = 0; j < grad.size(); ++j) {
    z[2 * j] = U * grad[j];
    z[2 * j + 1] = -U * grad[j];
  }
  return z;
}

TuningState update_tuning(TuningState tuning, const Vector& z,
                          const VertexWeights& weights) {
  const long d = weights.dim();
  if (z.size() != 2 * d) throw spec_error("update_tuning: size mismatch");

  const double mean = weights.p.dot(z);
  tuning.V += weights.p.dot((z.array() - mean).square().matrix());

  tuning.range_max = std::max(tuning.range_max, z.maxCoeff() - z.minCoeff());
  tuning.E_hat = dyadic_ceil(tuning.range_max);

  const double inf = std::numeric_limits<double>::infinity();
  const double range_branch = tuning.E_hat > 0.0 ? 1.0 / tuning.E_hat : inf;
  const double variance_branch =
      tuning.V > 0.0
          ? self_confident_rate_constant() * std::sqrt(std::log(2.0 * d) / tuning.V)
          : inf;
  tuning.eta = std::min(range_branch, variance_branch);
  return tuning;
}

namespace {

Vector softmax_weights(const Vector& cum_z, double eta) {
  if (!std::isfinite(eta))
    return Vector::Constant(cum_z.size(), 1.0 / double(cum_z.size()));
  Vector a = -eta * cum_z;
  a.array() -= a.maxCoeff();
  Vector w = a.array().exp();
  return w / w.sum();
}

}  // namespace

void eg_update(EgState& state, const Vector& grad) {
  if (grad.size() != state.d) throw spec_error("eg_update: dimension mismatch");
  if (!grad.allFinite()) throw spec_error("eg_update: non-finite gradient");

  const Vector z = loss_vector(grad, state.U);
  state.tuning = update_tuning(state.tuning, z, state.weights);
  state.cum_z += z;

  const double ginf = grad.lpNorm<Eigen::Infinity>();
  state.grad_sq_sum += ginf * ginf;
  state.grad_max = std::max(state.grad_max, ginf);

  const double eta = state.fixed_eta ? *state.fixed_eta : state.tuning.eta;
  state.weights.p = softmax_weights(state.cum_z, eta);
}

AdaptiveEgSquare::AdaptiveEgSquare(double U, long d) : state_(U, d) {}

AdaptiveEgSquare AdaptiveEgSquare::with_fixed_eta(double U, long d, double eta) {
  if (!(eta > 0) || !std::isfinite(eta))
    throw spec_error("AdaptiveEgSquare: fixed eta must be finite and positive");
  AdaptiveEgSquare f(U, d);
  f.state_.fixed_eta = eta;
  return f;
}

double AdaptiveEgSquare::do_step(const Vector& x) {
  if (x.size() != state_.d) throw spec_error("adaptive-eg: input dimension drift");
  point_ = eg_point(state_);
  return point_.dot(x);
}

void AdaptiveEgSquare::do_feed(const Vector& x, double y) {
  eg_update(state_, square_loss_gradient(point_, Round{x, y}));
}

}  // namespace ell1
