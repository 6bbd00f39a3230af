#include "ell1/maurey.hpp"

#include <cmath>
#include <string>

namespace ell1 {

namespace {

double tuning_alpha(double U, double X, double Y, long T, long d) {
  const double ratio = 2.0 * d * Y / (std::sqrt(double(T)) * U * X);
  return (U * X / Y) * std::sqrt(T * std::log(2.0) / std::log1p(ratio));
}

void check_positive(double U, double X, double Y, long T, long d) {
  if (!(U > 0 && X > 0 && Y > 0 && T >= 1 && d >= 1))
    throw spec_error("grid resolution: inputs must be positive");
}

}  // namespace

long select_m(double U, double X, double Y, long T, long d) {
  check_positive(U, X, Y, T, d);
  const double lower = (Y / X) * std::sqrt(std::log(1.0 + 2.0 * d) / (T * std::log(2.0)));
  const double upper = 2.0 * d * Y / (std::sqrt(double(T)) * X);
  if (U < lower)
    throw regime_error("grid resolution: U = " + std::to_string(U) +
                       " violates U >= (Y/X) sqrt(ln(1+2d)/(T ln 2)) = " +
                       std::to_string(lower));
  if (U > upper)
    throw regime_error("grid resolution: U = " + std::to_string(U) +
                       " violates U <= 2dY/(sqrt(T) X) = " + std::to_string(upper));
  const long m = static_cast<long>(std::floor(tuning_alpha(U, X, Y, T, d)));
  return std::max(1L, m);
}

long select_m_unchecked(double U, double X, double Y, long T, long d) {
  check_positive(U, X, Y, T, d);
  return std::max(1L, static_cast<long>(std::floor(tuning_alpha(U, X, Y, T, d))));
}

double grid_cardinality(long d, long m) {
  if (d < 1 || m < 1) throw spec_error("grid_cardinality: need d, m >= 1");
  // sum over the number j of nonzero coordinates
  double total = 1.0;  // j = 0
  const long jmax = std::min(d, m);
  for (long j = 1; j <= jmax; ++j) {
    double term = std::exp2(double(j));
    for (long i = 0; i < j; ++i) {
      term *= double(d - i) / double(j - i);  // C(d, j)
      term *= double(m - i) / double(j - i);  // C(m, j)
    }
    total += term;
  }
  return total;
}

double grid_cardinality_bound(long d, long m) {
  return std::pow(std::exp(1.0) * (2.0 * d + m) / m, double(m));
}

MaureyGrid enumerate_grid(long d, long m, double U, double cap) {
  if (d < 1 || m < 1) throw spec_error("enumerate_grid: need d, m >= 1");
  if (!(U > 0)) throw spec_error("enumerate_grid: radius must be positive");
  const double count = grid_cardinality(d, m);
  if (count > cap)
    throw spec_error("enumerate_grid: " + std::to_string(count) +
                     " points exceed the cap " + std::to_string(cap) +
                     " (combinatorial bound (e(2d+m)/m)^m = " +
                     std::to_string(grid_cardinality_bound(d, m)) + ")");

  MaureyGrid grid;
  grid.U = U;
  grid.m = m;
  grid.d = d;
  grid.points.resize(static_cast<long>(count), d);

  std::vector<long> k(d, 0);
  long row = 0;
  // Depth-first over coordinates, each k_j ascending: lexicographic order.
  auto recurse = [&](auto&& self, long j, long budget) -> void {
    if (j == d) {
      for (long i = 0; i < d; ++i) grid.points(row, i) = double(k[i]) * U / double(m);
      ++row;
      return;
    }
    for (long v = -budget; v <= budget; ++v) {
      k[j] = v;
      self(self, j + 1, budget - std::abs(v));
    }
  };
  recurse(recurse, 0, m);
  if (row != grid.size())
    throw std::logic_error("enumerate_grid: cardinality mismatch");
  return grid;
}

MaureyForecaster::MaureyForecaster(double U, double X, double Y, long T, long d)
    : MaureyForecaster(enumerate_grid(d, select_m(U, X, Y, T, d), U), Y) {}

MaureyForecaster::MaureyForecaster(MaureyGrid grid, double Y)
    : grid_(std::move(grid)), ewa_(grid_.size(), 1.0 / (8.0 * Y * Y), Y) {
  if (!(Y > 0)) throw spec_error("maurey: Y must be positive");
}

double MaureyForecaster::do_step(const Vector& x) {
  if (x.size() != grid_.d) throw spec_error("maurey: input dimension drift");
  preds_ = grid_.points * x;
  return ewa_predict(ewa_, preds_);
}

void MaureyForecaster::do_feed(const Vector&, double y) {
  ewa_feed(ewa_, preds_, y);
}

}  // namespace ell1
