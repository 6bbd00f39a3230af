#pragma once

#include "ell1/core.hpp"

#include <functional>

namespace ell1 {

/// Certified solution of min over B1(U) of a convex objective.
struct ComparatorResult {
  Vector u_star;
  double loss = 0.0;
  double gap = 0.0;  // linearized duality gap at u_star
  long iterations = 0;
};

/// Convex differentiable objective on R^d for the l1-ball solver.
class ConvexObjective {
 public:
  virtual ~ConvexObjective() = default;
  virtual long dimension() const = 0;
  virtual double value(const Vector& u) const = 0;
  virtual Vector gradient(const Vector& u) const = 0;
  /// Minimizing step size toward u + gamma * dir over [0, gamma_max].
  /// Default: bisection on the directional derivative.
  virtual double line_step(const Vector& u, const Vector& dir, double gamma_max) const;
};

/// Least-squares objective sum_t (y_t - u.x_t)^2 in precomputed Gram form.
class QuadraticObjective final : public ConvexObjective {
 public:
  explicit QuadraticObjective(const Stream& rounds);
  long dimension() const override { return gram_.rows(); }
  double value(const Vector& u) const override;
  Vector gradient(const Vector& u) const override;
  double line_step(const Vector& u, const Vector& dir, double gamma_max) const override;

 private:
  Eigen::MatrixXd gram_;  // sum_t x_t x_t^T
  Vector linear_;         // sum_t y_t x_t
  double constant_ = 0.0; // sum_t y_t^2
};

/// Objective of the form sum_t f_t(u . x_t) with convex C^1 scalar losses f_t.
/// The line search works on the residual scalars, one pass per probe.
class ResidualObjective final : public ConvexObjective {
 public:
  using ScalarValue = std::function<double(long t, double v)>;
  using ScalarSlope = std::function<double(long t, double v)>;

  ResidualObjective(const Stream& rounds, ScalarValue value, ScalarSlope slope);
  long dimension() const override { return inputs_.cols(); }
  double value(const Vector& u) const override;
  Vector gradient(const Vector& u) const override;
  double line_step(const Vector& u, const Vector& dir, double gamma_max) const override;

 private:
  Eigen::MatrixXd inputs_;  // one row per round
  ScalarValue value_;
  ScalarSlope slope_;
};

/// Conditional-gradient (Frank-Wolfe with away steps) minimization over
/// B1(U).  Stops when the duality gap is <= tol; throws if the iteration cap
/// is reached with a larger gap.  Vertex ties break toward the lowest
/// coordinate index, positive sign first.
ComparatorResult minimize_on_l1_ball(const ConvexObjective& objective, double U,
                                     double tol, long max_iterations = 100000);

/// Default comparator tolerance: 1e-9 * max(1, sum_t y_t^2).
double default_tolerance(const Stream& rounds);

ComparatorResult min_square_loss_l1(const Stream& rounds, double U, double tol);
ComparatorResult min_square_loss_l1(const Stream& rounds, double U);

ComparatorResult min_alpha_loss_l1(const Stream& rounds, double U,
                                   const LossSpec& spec, double tol);
ComparatorResult min_alpha_loss_l1(const Stream& rounds, double U,
                                   const LossSpec& spec);

}  // namespace ell1
