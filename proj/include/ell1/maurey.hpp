#pragma once

#include "ell1/core.hpp"
#include "ell1/ewa.hpp"

namespace ell1 {

/// Finite cover of B1(U): all points (k_1 U/m, ..., k_d U/m) with integer k_j
/// and sum |k_j| <= m, enumerated lexicographically.
struct MaureyGrid {
  double U = 1.0;
  long m = 1;
  long d = 1;
  Eigen::MatrixXd points;  // one row per grid point

  long size() const { return points.rows(); }
};

/// Resolution choice m = floor((UX/Y) sqrt(T ln2 / ln(1 + 2dY/(sqrt(T)UX)))).
/// Requires the mid-regime condition
///   (Y/X) sqrt(ln(1+2d)/(T ln2)) <= U <= 2dY/(sqrt(T) X);
/// throws regime_error naming the violated inequality otherwise.
long select_m(double U, double X, double Y, long T, long d);

/// Same formula clamped to >= 1 with no regime check (for exploratory sweeps).
long select_m_unchecked(double U, double X, double Y, long T, long d);

/// Exact cardinality sum_j 2^j C(d,j) C(m,j) of the grid.
double grid_cardinality(long d, long m);

/// Combinatorial upper bound (e(2d+m)/m)^m.
double grid_cardinality_bound(long d, long m);

/// Enumerate the grid; throws spec_error when the exact cardinality exceeds
/// the cap (default 2e6), reporting the combinatorial bound as well.
MaureyGrid enumerate_grid(long d, long m, double U, double cap = 2e6);

/// Clipped exponentially weighted aggregation of the grid points as experts,
/// tuned with eta = 1/(8 Y^2); each expert predicts u . x_t.
class MaureyForecaster final : public Forecaster {
 public:
  MaureyForecaster(double U, double X, double Y, long T, long d);
  MaureyForecaster(MaureyGrid grid, double Y);

  const MaureyGrid& grid() const { return grid_; }
  const EwaState& aggregator() const { return ewa_; }
  std::string name() const override { return "maurey"; }

 protected:
  double do_step(const Vector& x) override;
  void do_feed(const Vector& x, double y) override;

 private:
  MaureyGrid grid_;
  EwaState ewa_;
  Vector preds_;  // expert predictions of the pending round
};

}  // namespace ell1
