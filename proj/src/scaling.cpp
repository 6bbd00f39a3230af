#include "ell1/scaling.hpp"

#include "ell1/bounds.hpp"
#include "ell1/leg.hpp"
#include "ell1/lipschitz.hpp"

#include <algorithm>
#include <cmath>

namespace ell1 {

UGrid build_grid(double X, double Y, long T, long d, double c) {
  if (!(X > 0 && Y > 0 && T >= 1 && d >= 1 && c > 0))
    throw spec_error("build_grid: inputs must be positive");
  const long R = bounds::ceil_log2_plus(2.0 * T / c);
  const double base = (Y / X) / std::sqrt(T * std::log(2.0 * d));
  UGrid grid;
  grid.radii.reserve(R + 1);
  for (long r = 0; r <= R; ++r) grid.radii.push_back(std::ldexp(base, int(r)));
  return grid;
}

UGrid build_adaptive_grid(long t, double k, long d, double c) {
  if (!(k > 1.0)) throw spec_error("build_adaptive_grid: need k > 1");
  if (!(t >= 1 && d >= 1 && c > 0))
    throw spec_error("build_adaptive_grid: inputs must be positive");
  const long R = bounds::ceil_log2_plus(2.0 * t / c) +
                 static_cast<long>(std::ceil(2.0 * k * std::log2(double(t))));
  const double base = std::pow(double(t), -k) / std::sqrt(t * std::log(2.0 * d));
  UGrid grid;
  grid.radii.reserve(R + 1);
  for (long r = 0; r <= R; ++r) grid.radii.push_back(std::ldexp(base, int(r)));
  return grid;
}

ScalingForecaster::ScalingForecaster(const UGrid& grid,
                                     const SubForecasterFactory& factory, double Y)
    : grid_(grid), ewa_(std::max(grid.size(), 1L), 1.0 / (8.0 * Y * Y), Y) {
  if (grid.size() < 1) throw spec_error("scaling: empty radius grid");
  if (!(Y > 0)) throw spec_error("scaling: Y must be positive");
  subs_.reserve(grid.size());
  for (double U : grid.radii) subs_.push_back(factory(U));
}

double ScalingForecaster::do_step(const Vector& x) {
  preds_.resize(grid_.size());
  for (long r = 0; r < grid_.size(); ++r) {
    try {
      preds_[r] = subs_[r]->step(x);
    } catch (const std::logic_error& e) {
      throw std::logic_error("scaling: sub-forecaster at radius " +
                             std::to_string(grid_.radii[r]) + ": " + e.what());
    }
  }
  return ewa_predict(ewa_, preds_);
}

void ScalingForecaster::do_feed(const Vector&, double y) {
  ewa_feed(ewa_, preds_, y);
  for (long r = 0; r < grid_.size(); ++r) {
    try {
      subs_[r]->feed(y);
    } catch (const std::logic_error& e) {
      throw std::logic_error("scaling: sub-forecaster at radius " +
                             std::to_string(grid_.radii[r]) + ": " + e.what());
    }
  }
}

FullyAdaptiveForecaster::FullyAdaptiveForecaster(long d, double k, double c)
    : d_(d), k_(k), c_(c > 0 ? c : bounds::scaling_default_c()) {
  if (d < 1) throw spec_error("fully-adaptive: dimension must be >= 1");
  if (!(k > 1.0)) throw spec_error("fully-adaptive: need k > 1");
  anchor_ = 1.0 / std::sqrt(std::log(2.0 * d));
}

void FullyAdaptiveForecaster::grow_grid_for_round(long t) {
  const long R = bounds::ceil_log2_plus(2.0 * t / c_) +
                 static_cast<long>(std::ceil(2.0 * k_ * std::log2(double(t))));
  const double lo = std::pow(double(t), -k_) / std::sqrt(t * std::log(2.0 * d_));
  const long target_lo = static_cast<long>(std::floor(std::log2(lo / anchor_)));
  const long target_hi =
      static_cast<long>(std::ceil(std::log2(lo / anchor_) + double(R)));

  const auto spawn = [&](long r, bool front) {
    const double seed_loss =
        cum_loss_.empty() ? 0.0
                          : *std::min_element(cum_loss_.begin(), cum_loss_.end());
    auto sub = std::make_unique<LegForecaster>(std::ldexp(anchor_, int(r)), d_, 2.0);
    if (front) {
      subs_.insert(subs_.begin(), std::move(sub));
      cum_loss_.insert(cum_loss_.begin(), seed_loss);
    } else {
      subs_.push_back(std::move(sub));
      cum_loss_.push_back(seed_loss);
    }
  };

  if (r_hi_ < r_lo_) {  // first round
    r_lo_ = target_lo;
    r_hi_ = target_hi;
    for (long r = r_lo_; r <= r_hi_; ++r) spawn(r, false);
    return;
  }
  while (r_lo_ > target_lo) spawn(--r_lo_, true);
  while (r_hi_ < target_hi) spawn(++r_hi_, false);
}

std::vector<double> FullyAdaptiveForecaster::current_radii() const {
  std::vector<double> radii;
  for (long r = r_lo_; r <= r_hi_; ++r) radii.push_back(std::ldexp(anchor_, int(r)));
  return radii;
}

double FullyAdaptiveForecaster::do_step(const Vector& x) {
  if (x.size() != d_) throw spec_error("fully-adaptive: input dimension drift");
  grow_grid_for_round(t_ + 1);
  const long K = static_cast<long>(subs_.size());
  preds_.resize(K);
  for (long i = 0; i < K; ++i) preds_[i] = subs_[i]->step(x);

  const double eta = B_ > 0.0 ? 1.0 / (8.0 * B_ * B_) : 0.0;
  Vector a(K);
  for (long i = 0; i < K; ++i) a[i] = -eta * cum_loss_[i];
  a.array() -= a.maxCoeff();
  Vector w = a.array().exp();
  w /= w.sum();

  double out = 0.0;
  for (long i = 0; i < K; ++i) out += w[i] * clip(preds_[i], B_);
  return out;
}

void FullyAdaptiveForecaster::do_feed(const Vector&, double y) {
  for (size_t i = 0; i < subs_.size(); ++i) {
    const double r = y - clip(preds_[static_cast<long>(i)], B_);
    cum_loss_[i] += r * r;
    subs_[i]->feed(y);
  }
  y_max_ = std::max(y_max_, std::abs(y));
  B_ = update_threshold(y_max_, 2.0);
  ++t_;
}

}  // namespace ell1
