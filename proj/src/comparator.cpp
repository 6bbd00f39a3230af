#include "ell1/comparator.hpp"

#include <cmath>
#include <limits>

namespace ell1 {

namespace {

Eigen::MatrixXd stack_inputs(const Stream& rounds) {
  if (rounds.empty()) throw spec_error("comparator: empty stream");
  const long d = rounds.front().x.size();
  if (d < 1) throw spec_error("comparator: zero-dimensional inputs");
  Eigen::MatrixXd inputs(rounds.size(), d);
  for (long t = 0; t < static_cast<long>(rounds.size()); ++t) {
    if (rounds[t].x.size() != d) throw spec_error("comparator: inconsistent dimension");
    inputs.row(t) = rounds[t].x.transpose();
  }
  return inputs;
}

// Signed vertex id v in [0, 2d): coordinate v/2, sign + for even v.
long vertex_coord(long v) { return v / 2; }
double vertex_sign(long v) { return (v % 2 == 0) ? 1.0 : -1.0; }

// argmin over vertices of g . (sign * U * e_j); ties to lowest id.
long lmo_vertex(const Vector& g, double U) {
  long best = 0;
  double best_val = std::numeric_limits<double>::infinity();
  for (long v = 0; v < 2 * g.size(); ++v) {
    const double val = vertex_sign(v) * U * g[vertex_coord(v)];
    if (val < best_val) {
      best_val = val;
      best = v;
    }
  }
  return best;
}

}  // namespace

double ConvexObjective::line_step(const Vector& u, const Vector& dir,
                                  double gamma_max) const {
  auto slope = [&](double g) { return gradient(u + g * dir).dot(dir); };
  if (slope(0.0) >= 0.0) return 0.0;
  if (slope(gamma_max) <= 0.0) return gamma_max;
  double lo = 0.0, hi = gamma_max;
  for (int i = 0; i < 70; ++i) {
    const double mid = 0.5 * (lo + hi);
    (slope(mid) <= 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

QuadraticObjective::QuadraticObjective(const Stream& rounds) {
  const Eigen::MatrixXd inputs = stack_inputs(rounds);
  Vector y(rounds.size());
  for (long t = 0; t < static_cast<long>(rounds.size()); ++t) y[t] = rounds[t].y;
  gram_ = inputs.transpose() * inputs;
  linear_ = inputs.transpose() * y;
  constant_ = y.squaredNorm();
}

double QuadraticObjective::value(const Vector& u) const {
  return u.dot(gram_ * u) - 2.0 * linear_.dot(u) + constant_;
}

Vector QuadraticObjective::gradient(const Vector& u) const {
  return 2.0 * (gram_ * u - linear_);
}

double QuadraticObjective::line_step(const Vector& u, const Vector& dir,
                                     double gamma_max) const {
  const double curvature = dir.dot(gram_ * dir);
  const double slope0 = (gram_ * u - linear_).dot(dir);
  if (slope0 >= 0.0) return 0.0;
  if (curvature <= 0.0) return gamma_max;
  return std::min(gamma_max, -slope0 / curvature);
}

ResidualObjective::ResidualObjective(const Stream& rounds, ScalarValue value,
                                     ScalarSlope slope)
    : inputs_(stack_inputs(rounds)), value_(std::move(value)), slope_(std::move(slope)) {}

double ResidualObjective::value(const Vector& u) const {
  const Vector v = inputs_ * u;
  double total = 0.0;
  for (long t = 0; t < v.size(); ++t) total += value_(t, v[t]);
  return total;
}

Vector ResidualObjective::gradient(const Vector& u) const {
  const Vector v = inputs_ * u;
  Vector s(v.size());
  for (long t = 0; t < v.size(); ++t) s[t] = slope_(t, v[t]);
  return inputs_.transpose() * s;
}

double ResidualObjective::line_step(const Vector& u, const Vector& dir,
                                    double gamma_max) const {
  const Vector v = inputs_ * u;
  const Vector w = inputs_ * dir;
  auto slope = [&](double g) {
    double total = 0.0;
    for (long t = 0; t < v.size(); ++t) total += slope_(t, v[t] + g * w[t]) * w[t];
    return total;
  };
  if (slope(0.0) >= 0.0) return 0.0;
  if (slope(gamma_max) <= 0.0) return gamma_max;
  double lo = 0.0, hi = gamma_max;
  for (int i = 0; i < 70; ++i) {
    const double mid = 0.5 * (lo + hi);
    (slope(mid) <= 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

ComparatorResult minimize_on_l1_ball(const ConvexObjective& objective, double U,
                                     double tol, long max_iterations) {
  if (!(tol > 0)) throw spec_error("comparator: tolerance must be positive");
  if (!(U > 0)) throw spec_error("comparator: radius must be positive");
  const long d = objective.dimension();

  Vector u = Vector::Zero(d);
  const Vector g0 = objective.gradient(u);
  {
    const double gap0 = U * g0.lpNorm<Eigen::Infinity>();
    if (gap0 <= tol)
      return {u, objective.value(u), gap0, 0};
  }

  // Convex-combination weights over the 2d signed vertices.
  Vector weights = Vector::Zero(2 * d);
  const auto vertex_point = [&](long v) {
    Vector p = Vector::Zero(d);
    p[vertex_coord(v)] = vertex_sign(v) * U;
    return p;
  };
  const auto rebuild_iterate = [&]() {
    u.setZero();
    for (long v = 0; v < 2 * d; ++v)
      if (weights[v] > 0.0) u[vertex_coord(v)] += weights[v] * vertex_sign(v) * U;
  };

  weights[lmo_vertex(g0, U)] = 1.0;
  rebuild_iterate();

  double gap = std::numeric_limits<double>::infinity();
  for (long k = 1; k <= max_iterations; ++k) {
    const Vector g = objective.gradient(u);
    const long s = lmo_vertex(g, U);
    const double g_dot_u = g.dot(u);
    gap = g_dot_u - vertex_sign(s) * U * g[vertex_coord(s)];
    if (gap <= tol) return {u, objective.value(u), gap, k};

    // Away vertex: worst active vertex under the current gradient.
    long a = -1;
    double a_val = -std::numeric_limits<double>::infinity();
    for (long v = 0; v < 2 * d; ++v) {
      if (weights[v] <= 0.0) continue;
      const double val = vertex_sign(v) * U * g[vertex_coord(v)];
      if (val > a_val) {
        a_val = val;
        a = v;
      }
    }

    const double fw_descent = vertex_sign(s) * U * g[vertex_coord(s)] - g_dot_u;
    const double away_descent = (a >= 0 && weights[a] < 1.0) ? g_dot_u - a_val
                                : 0.0;

    if (fw_descent <= away_descent) {
      const Vector dir = vertex_point(s) - u;
      const double gamma = objective.line_step(u, dir, 1.0);
      weights *= (1.0 - gamma);
      weights[s] += gamma;
      u += gamma * dir;
    } else {
      const double gamma_max = weights[a] / (1.0 - weights[a]);
      const Vector dir = u - vertex_point(a);
      const double gamma = objective.line_step(u, dir, gamma_max);
      weights *= (1.0 + gamma);
      weights[a] -= gamma;
      if (weights[a] < 1e-15) weights[a] = 0.0;
      u += gamma * dir;
    }
    if (k % 128 == 0) rebuild_iterate();
  }
  throw std::runtime_error(
      "comparator: conditional gradient hit the iteration cap with gap " +
      std::to_string(gap) + " > tol " + std::to_string(tol));
}

double default_tolerance(const Stream& rounds) {
  double y2 = 0.0;
  for (const Round& r : rounds) y2 += r.y * r.y;
  return 1e-9 * std::max(1.0, y2);
}

ComparatorResult min_square_loss_l1(const Stream& rounds, double U, double tol) {
  return minimize_on_l1_ball(QuadraticObjective(rounds), U, tol);
}

ComparatorResult min_square_loss_l1(const Stream& rounds, double U) {
  return min_square_loss_l1(rounds, U, default_tolerance(rounds));
}

ComparatorResult min_alpha_loss_l1(const Stream& rounds, double U,
                                   const LossSpec& spec, double tol) {
  if (spec.alpha == 2.0) return min_square_loss_l1(rounds, U, tol);
  std::vector<double> y(rounds.size());
  for (size_t t = 0; t < rounds.size(); ++t) y[t] = rounds[t].y;
  const double alpha = spec.alpha;
  ResidualObjective objective(
      rounds,
      [y, alpha](long t, double v) { return std::pow(std::abs(y[t] - v), alpha); },
      [y, alpha](long t, double v) {
        const double r = y[t] - v;
        if (r == 0.0) return 0.0;
        return -alpha * std::copysign(std::pow(std::abs(r), alpha - 1.0), r);
      });
  return minimize_on_l1_ball(objective, U, tol);
}

ComparatorResult min_alpha_loss_l1(const Stream& rounds, double U,
                                   const LossSpec& spec) {
  return min_alpha_loss_l1(rounds, U, spec, default_tolerance(rounds));
}

}  // namespace ell1
