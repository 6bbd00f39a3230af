#pragma once

#include <optional>

namespace ell1::bounds {

/// Regime of the intrinsic quantity kappa = sqrt(T) U X / (2 d Y).
/// kappa = 1 separates the sqrt(T)-regret regime from the log-regret regime;
/// below kappa_mid_threshold the dimension-free small-U bound takes over.
enum class RegimeLabel { BelowGrid, Mid, High };

struct Regime {
  double kappa = 0.0;
  RegimeLabel label = RegimeLabel::Mid;
};

double kappa_mid_threshold(long d);  // sqrt(ln(1+2d)) / (2d sqrt(ln 2))

/// Classify (U, X, Y, T, d); the boundary kappa == 1 is assigned to Mid.
Regime kappa_regime(double U, double X, double Y, long T, long d);

/// Three-regime minimax regret bound as a function of (U, X, Y, T, d).
/// Within 1e-9 (relative) of a case threshold both adjacent formulas are
/// evaluated and the minimum reported.
double minimax_regret_bound(double U, double X, double Y, long T, long d);

/// The same bound rewritten in terms of the regime (d, Y, kappa).
double regime_bound(const Regime& regime, long d, double Y);
double regime_bound_case(RegimeLabel label, double kappa, long d, double Y);

/// Gradient-form regret bound of the adaptive exponentiated-gradient
/// forecaster: 4U sqrt(S ln(2d)) + U (8 ln(2d) + 12) M, where S is the sum of
/// squared sup-norms of the fed gradients and M their maximum.
double eg_gradient_bound(double U, double grad_sq_sum, double grad_max, long d);

/// Square-loss regret bound of the adaptive exponentiated-gradient
/// forecaster.  With a comparator loss L* this is the small-losses form
/// 8UX sqrt(L* ln(2d)) + (137 ln(2d) + 24)(UXY + U^2 X^2); without one the
/// sqrt(T) fallback 8UXY sqrt(T ln(2d)) + same additive term.
double eg_square_loss_bound(double U, double X, double Y, long T, long d,
                            std::optional<double> comparator_loss = std::nullopt);

/// Constants of the alpha-loss bound for the Lipschitzifying forecaster.
struct AlphaConstants {
  double a;       // 4 alpha (1 + 2^{1/alpha})^{alpha/2 - 1}
  double b;       // alpha (1 + 2^{1/alpha})^{alpha - 1}
  double a_lin;   // coefficient of ln(2d) U X Y^{alpha-1}
  double a_quad;  // coefficient of ln(2d) U^2 X^2 Y^{alpha-2}
  double a_tail;  // coefficient of Y^alpha
};
AlphaConstants constants_alpha(double alpha);

/// Full right-hand side of the alpha-loss bound on the cumulative loss of the
/// Lipschitzifying forecaster, given the comparator loss on the
/// Lipschitzified objective.
double leg_alpha_loss_bound(double U, double X, double Y, double alpha, long d,
                            double lip_comparator_loss);

/// Uniform (non-small-losses) square-loss regret bound of the Lipschitzifying
/// forecaster: c1 UXY (sqrt(T ln(2d)) + 8 ln(2d)) + c2 Y^2.
double leg_square_loss_uniform_bound(double U, double X, double Y, long T, long d);
double leg_uniform_c1();  // 8 (sqrt(2) + 1)
double leg_uniform_c2();  // 4 (1 + 1/sqrt(2))^2

/// Regret bound of the radius-aggregating forecaster on B1(U):
/// 2c UXY sqrt(T ln(2d)) + 8 Y^2 ln(ceil_log2_plus(2T/c) + 1) + (c + c') Y^2.
double scaling_bound(double U, double X, double Y, long T, long d, double c,
                     double c_prime);
double scaling_default_c();        // 72 (sqrt(2) + 1)
double scaling_default_c_prime();  // 4 (1 + 1/sqrt(2))^2

/// Largest value consistent with x <= a + b sqrt(x):  a + b sqrt(a) + b^2.
double solve_quadratic_regret(double a, double b);

/// max(0, ceil(log2 x)) as a long.
long ceil_log2_plus(double x);

}  // namespace ell1::bounds
