#pragma once

#include "ell1/core.hpp"

namespace ell1 {

/// Threshold B with B^alpha = 2^k for an integer k, the smallest such value
/// covering the running max of |y|; 0 before any nonzero observation.
/// Stored through the integer exponent so the ratchet reproduces bit-exactly.
class DyadicThreshold {
 public:
  explicit DyadicThreshold(double alpha);

  void observe(double y);
  double value() const { return B_; }
  double y_max() const { return y_max_; }

 private:
  double alpha_;
  double y_max_ = 0.0;
  double B_ = 0.0;
};

/// (2^ceil(log2(y_history_max^alpha)))^(1/alpha), or 0 when the max is 0.
/// Satisfies y_history_max <= result <= 2^(1/alpha) * y_history_max.
double update_threshold(double y_history_max, double alpha);

/// One round's Lipschitzified alpha-loss.  Inactive (|y| > B) rounds are
/// identically zero; active rounds equal |y - u.x|^alpha while |u.x| <= B and
/// continue linearly outside.
struct LipLoss {
  double y = 0.0;
  Vector x;
  double B = 0.0;
  double alpha = 2.0;
  bool active = false;

  LipLoss(double y, Vector x, double B, double alpha);
};

/// Loss and its derivative as functions of the scalar v = u.x.
double lip_value(double v, double y, double B, double alpha);
double lip_slope(double v, double y, double B, double alpha);

double lip_eval(const LipLoss& loss, const Vector& u);
Vector lip_gradient(const LipLoss& loss, const Vector& u);

}  // namespace ell1
