#pragma once

#include <Eigen/Core>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ell1 {

using Vector = Eigen::VectorXd;

/// A configuration or parameter-regime problem; maps to CLI exit code 2.
struct spec_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Inputs outside the parameter regime an algorithm is defined for.
struct regime_error : spec_error {
  using spec_error::spec_error;
};

/// File-system problem; maps to CLI exit code 3.
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One (x_t, y_t) pair, the atomic stream element.
struct Round {
  Vector x;
  double y = 0.0;
};

using Stream = std::vector<Round>;

/// Envelope of a stream: X = max_t ||x_t||_inf, Y = max_t |y_t|, T = length.
struct StreamBounds {
  double X = 0.0;
  double Y = 0.0;
  long T = 0;

  static StreamBounds from_stream(const Stream& rounds);
};

/// Exponent of the alpha-loss |y - p|^alpha; requires alpha >= 2.
struct LossSpec {
  double alpha = 2.0;

  LossSpec() = default;
  explicit LossSpec(double a) : alpha(a) {
    if (!(a >= 2.0)) throw spec_error("LossSpec: alpha must be >= 2");
  }
};

/// min{B, max{-B, v}} for B >= 0.
inline double clip(double v, double bound) noexcept {
  return std::min(bound, std::max(-bound, v));
}

/// |y - p|^alpha.  Exact product for alpha == 2.
double alpha_loss(double y, double p, const LossSpec& spec) noexcept;

/// -2 (y - u.x) x.  Throws on dimension mismatch.
Vector square_loss_gradient(const Vector& u, const Round& round);

/// Online forecaster contract: strictly alternating step/feed calls.
/// step(x_t) returns the prediction yhat_t from x_t and past rounds only;
/// feed(y_t) then incorporates the revealed observation.
class Forecaster {
 public:
  virtual ~Forecaster() = default;

  double step(const Vector& x);
  void feed(double y);

  /// Internal comparator point u_hat_t for gradient-based forecasters.
  virtual std::optional<Vector> comparator_point() const { return std::nullopt; }

  virtual std::string name() const = 0;

 protected:
  virtual double do_step(const Vector& x) = 0;
  virtual void do_feed(const Vector& x, double y) = 0;

 private:
  bool awaiting_feed_ = false;
  Vector last_x_;
};

/// Predicts 0 on every round.
class NullForecaster final : public Forecaster {
 public:
  std::string name() const override { return "null"; }

 protected:
  double do_step(const Vector&) override { return 0.0; }
  void do_feed(const Vector&, double) override {}
};

/// Per-step record of a run.  Cumulative arrays are partial sums of
/// nonnegative per-step losses; comparator columns are filled post hoc.
struct RegretTrace {
  long horizon = 0;
  std::vector<double> prediction;
  std::vector<double> loss;
  std::vector<double> cum_loss;
  std::vector<double> cum_comparator_loss;
  std::vector<double> regret;
  std::optional<double> bound;

  explicit RegretTrace(long T);

  void record(double prediction, double loss);
  bool complete() const { return static_cast<long>(loss.size()) == horizon; }

  /// Fill the comparator columns with the running loss of a fixed point u.
  void fill_comparator(const Stream& rounds, const Vector& u, const LossSpec& spec);
};

/// Sum of recorded losses minus the comparator total.  Requires a complete trace.
double compute_regret(const RegretTrace& trace, double comparator_loss);

/// Drive a forecaster through a stream, scoring with the alpha-loss.
RegretTrace run_stream(Forecaster& forecaster, const Stream& rounds,
                       const LossSpec& spec = LossSpec{});

}  // namespace ell1
