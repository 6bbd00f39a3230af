#include "ell1/bounds.hpp"

#include "ell1/core.hpp"

#include <algorithm>
#include <cmath>

namespace ell1::bounds {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

bool near(double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b)); }

double low_case(double U, double X, double Y, long T, long d) {
  return 3.0 * U * X * Y * std::sqrt(2.0 * T * std::log(2.0 * d));
}

double mid_case(double U, double X, double Y, long T, long d) {
  const double ratio = 2.0 * d * Y / (std::sqrt(double(T)) * U * X);
  return 26.0 * U * X * Y * std::sqrt(T * std::log1p(ratio));
}

double high_case(double U, double X, double Y, long T, long d) {
  const double ratio = std::sqrt(double(T)) * U * X / (d * Y);
  return 32.0 * d * Y * Y * std::log1p(ratio) + d * Y * Y;
}

}  // namespace

double kappa_mid_threshold(long d) {
  return std::sqrt(std::log(1.0 + 2.0 * d)) / (2.0 * d * std::sqrt(std::log(2.0)));
}

Regime kappa_regime(double U, double X, double Y, long T, long d) {
  if (!(U > 0 && X > 0 && Y > 0 && T >= 1 && d >= 1))
    throw spec_error("kappa_regime: inputs must be positive");
  Regime r;
  r.kappa = std::sqrt(double(T)) * U * X / (2.0 * d * Y);
  if (r.kappa < kappa_mid_threshold(d))
    r.label = RegimeLabel::BelowGrid;
  else if (r.kappa <= 1.0)
    r.label = RegimeLabel::Mid;
  else
    r.label = RegimeLabel::High;
  return r;
}

double minimax_regret_bound(double U, double X, double Y, long T, long d) {
  if (!(U > 0 && X > 0 && Y > 0 && T >= 1 && d >= 1))
    throw spec_error("minimax_regret_bound: inputs must be positive");
  const double low_threshold =
      (Y / X) * std::sqrt(std::log(1.0 + 2.0 * d) / (T * std::log(2.0)));
  const double high_threshold = 2.0 * d * Y / (std::sqrt(double(T)) * X);
  if (near(U, low_threshold))
    return std::min(low_case(U, X, Y, T, d), mid_case(U, X, Y, T, d));
  if (near(U, high_threshold))
    return std::min(mid_case(U, X, Y, T, d), high_case(U, X, Y, T, d));
  if (U < low_threshold) return low_case(U, X, Y, T, d);
  if (U <= high_threshold) return mid_case(U, X, Y, T, d);
  return high_case(U, X, Y, T, d);
}

double regime_bound_case(RegimeLabel label, double kappa, long d, double Y) {
  switch (label) {
    case RegimeLabel::BelowGrid:
      return 6.0 * d * Y * Y * kappa * std::sqrt(2.0 * std::log(2.0 * d));
    case RegimeLabel::Mid:
      return 52.0 * d * Y * Y * kappa * std::sqrt(std::log1p(1.0 / kappa));
    case RegimeLabel::High:
      return 32.0 * d * Y * Y * (std::log1p(2.0 * kappa) + 1.0);
  }
  throw spec_error("regime_bound_case: unknown label");
}

double regime_bound(const Regime& regime, long d, double Y) {
  return regime_bound_case(regime.label, regime.kappa, d, Y);
}

double eg_gradient_bound(double U, double grad_sq_sum, double grad_max, long d) {
  if (grad_sq_sum < 0 || grad_max < 0)
    throw spec_error("eg_gradient_bound: negative gradient statistics");
  const double l = std::log(2.0 * d);
  return 4.0 * U * std::sqrt(grad_sq_sum * l) + U * (8.0 * l + 12.0) * grad_max;
}

double eg_square_loss_bound(double U, double X, double Y, long T, long d,
                            std::optional<double> comparator_loss) {
  const double l = std::log(2.0 * d);
  const double additive = (137.0 * l + 24.0) * (U * X * Y + U * U * X * X);
  const double main = comparator_loss
                          ? 8.0 * U * X * std::sqrt(*comparator_loss * l)
                          : 8.0 * U * X * Y * std::sqrt(T * l);
  return main + additive;
}

AlphaConstants constants_alpha(double alpha) {
  if (!(alpha >= 2.0)) throw spec_error("constants_alpha: alpha must be >= 2");
  const double ln2 = std::log(2.0);
  const double up = 1.0 + std::exp2(1.0 / alpha);    // 1 + 2^{1/alpha}
  const double dn = 1.0 + std::exp2(-1.0 / alpha);   // 1 + 2^{-1/alpha}
  AlphaConstants k;
  k.a = 4.0 * alpha * std::pow(up, alpha / 2.0 - 1.0);
  k.b = alpha * std::pow(up, alpha - 1.0);
  const double root = std::sqrt(k.b * (4.0 + 6.0 / ln2));
  k.a_lin = k.a * (root + 2.0 * std::pow(dn, alpha / 2.0) / std::sqrt(ln2)) + 8.0 * k.b;
  k.a_quad = k.a * (root + k.a);
  k.a_tail = 4.0 * std::pow(dn, alpha);
  return k;
}

double leg_alpha_loss_bound(double U, double X, double Y, double alpha, long d,
                            double lip_comparator_loss) {
  const AlphaConstants k = constants_alpha(alpha);
  const double l = std::log(2.0 * d);
  return lip_comparator_loss +
         k.a * U * X * std::pow(Y, alpha / 2.0 - 1.0) *
             std::sqrt(lip_comparator_loss * l) +
         (k.a_lin * l + 12.0 * k.b) * U * X * std::pow(Y, alpha - 1.0) +
         k.a_quad * l * U * U * X * X * std::pow(Y, alpha - 2.0) +
         k.a_tail * std::pow(Y, alpha);
}

double leg_uniform_c1() { return 8.0 * (kSqrt2 + 1.0); }

double leg_uniform_c2() {
  const double v = 1.0 + 1.0 / kSqrt2;
  return 4.0 * v * v;
}

double leg_square_loss_uniform_bound(double U, double X, double Y, long T, long d) {
  const double l = std::log(2.0 * d);
  return leg_uniform_c1() * U * X * Y * (std::sqrt(T * l) + 8.0 * l) +
         leg_uniform_c2() * Y * Y;
}

double scaling_default_c() { return 72.0 * (kSqrt2 + 1.0); }

double scaling_default_c_prime() { return leg_uniform_c2(); }

double scaling_bound(double U, double X, double Y, long T, long d, double c,
                     double c_prime) {
  if (!(c > 0)) throw spec_error("scaling_bound: c must be positive");
  const double l = std::log(2.0 * d);
  return 2.0 * c * U * X * Y * std::sqrt(T * l) +
         8.0 * Y * Y * std::log(double(ceil_log2_plus(2.0 * T / c) + 1)) +
         (c + c_prime) * Y * Y;
}

double solve_quadratic_regret(double a, double b) {
  if (a < 0 || b < 0) throw spec_error("solve_quadratic_regret: negative inputs");
  return a + b * std::sqrt(a) + b * b;
}

long ceil_log2_plus(double x) {
  if (!(x > 0)) throw spec_error("ceil_log2_plus: x must be positive");
  const long k = static_cast<long>(std::ceil(std::log2(x)));
  return std::max(0L, k);
}

}  // namespace ell1::bounds
