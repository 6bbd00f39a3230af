#include "ell1/lipschitz.hpp"

#include <cmath>

namespace ell1 {

namespace {

// Smallest integer k with 2^k >= p, for p > 0, exact via the binary exponent.
long long dyadic_exponent_ceil(double p) {
  int e = 0;
  const double f = std::frexp(p, &e);  // p = f * 2^e, f in [0.5, 1)
  if (f == 0.0) return -1074;          // underflowed power; harmless floor
  return (f == 0.5) ? e - 1 : e;
}

}  // namespace

double update_threshold(double y_history_max, double alpha) {
  if (!(alpha >= 2.0)) throw spec_error("update_threshold: alpha must be >= 2");
  if (y_history_max < 0) throw spec_error("update_threshold: negative max");
  if (y_history_max == 0.0) return 0.0;
  const double p = std::pow(y_history_max, alpha);
  const long long k = p > 0 ? dyadic_exponent_ceil(p)
                            : static_cast<long long>(std::ceil(alpha * std::log2(y_history_max)));
  return std::pow(2.0, double(k) / alpha);
}

DyadicThreshold::DyadicThreshold(double alpha) : alpha_(alpha) {
  if (!(alpha >= 2.0)) throw spec_error("DyadicThreshold: alpha must be >= 2");
}

void DyadicThreshold::observe(double y) {
  const double a = std::abs(y);
  if (a <= y_max_) return;
  y_max_ = a;
  B_ = update_threshold(y_max_, alpha_);
}

LipLoss::LipLoss(double y_, Vector x_, double B_, double alpha_)
    : y(y_), x(std::move(x_)), B(B_), alpha(alpha_), active(std::abs(y_) <= B_) {
  if (!(alpha >= 2.0)) throw spec_error("LipLoss: alpha must be >= 2");
  if (B < 0) throw spec_error("LipLoss: negative threshold");
}

double lip_value(double v, double y, double B, double alpha) {
  if (std::abs(y) > B) return 0.0;
  if (std::abs(v) <= B) {
    const double r = y - v;
    return alpha == 2.0 ? r * r : std::pow(std::abs(r), alpha);
  }
  if (v > B) {
    const double base = std::abs(y - B);
    return std::pow(base, alpha) + alpha * std::pow(base, alpha - 1.0) * (v - B);
  }
  const double base = std::abs(y + B);
  return std::pow(base, alpha) - alpha * std::pow(base, alpha - 1.0) * (v + B);
}

double lip_slope(double v, double y, double B, double alpha) {
  if (std::abs(y) > B) return 0.0;
  const double r = y - clip(v, B);
  if (alpha == 2.0) return -2.0 * r;
  if (r == 0.0) return 0.0;
  return -alpha * std::copysign(std::pow(std::abs(r), alpha - 1.0), r);
}

double lip_eval(const LipLoss& loss, const Vector& u) {
  if (u.size() != loss.x.size()) throw spec_error("lip_eval: dimension mismatch");
  if (!loss.active) return 0.0;
  return lip_value(u.dot(loss.x), loss.y, loss.B, loss.alpha);
}

Vector lip_gradient(const LipLoss& loss, const Vector& u) {
  if (u.size() != loss.x.size()) throw spec_error("lip_gradient: dimension mismatch");
  if (!loss.active) return Vector::Zero(loss.x.size());
  return lip_slope(u.dot(loss.x), loss.y, loss.B, loss.alpha) * loss.x;
}

}  // namespace ell1
