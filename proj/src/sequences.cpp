#include "ell1/sequences.hpp"

#include <cmath>

namespace ell1 {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// Substream tags so that support, inputs, and noise never share counters.
constexpr std::uint64_t kTagSupport = 0x53555050ULL;
constexpr std::uint64_t kTagInputs = 0x494E5055ULL;
constexpr std::uint64_t kTagNoise = 0x4E4F4953ULL;

std::uint64_t derived_seed(std::uint64_t seed, std::uint64_t tag) {
  return counter_bits(seed, tag);
}

void require_bounded(double v, double bound, const char* what) {
  if (std::abs(v) > bound)
    throw std::logic_error(std::string("generator bound violated: ") + what);
}

}  // namespace

std::uint64_t counter_bits(std::uint64_t seed, std::uint64_t counter) {
  std::uint64_t z = seed + (counter + 1) * kGolden;
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

double counter_uniform01(std::uint64_t seed, std::uint64_t counter) {
  return (double(counter_bits(seed, counter) >> 11) + 0.5) * 0x1p-53;
}

double counter_normal(std::uint64_t seed, std::uint64_t counter) {
  // Rational approximation of the inverse normal CDF (Acklam's coefficients).
  static const double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                              -2.759285104469687e+02, 1.383577518672690e+02,
                              -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                              -1.556989798598866e+02, 6.680131188771972e+01,
                              -1.328068155288572e+01};
  static const double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                              -2.400758277161838e+00, -2.549732539343734e+00,
                              4.374664141464968e+00,  2.938163982698783e+00};
  static const double dd[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
  const double p = counter_uniform01(seed, counter);
  const double p_low = 0.02425;
  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((dd[0] * q + dd[1]) * q + dd[2]) * q + dd[3]) * q + 1.0);
  }
  if (p > 1.0 - p_low) {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((dd[0] * q + dd[1]) * q + dd[2]) * q + dd[3]) * q + 1.0);
  }
  const double q = p - 0.5;
  const double r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

Stream gen_uniform_bounded(const StreamConfig& cfg) {
  if (cfg.d < 1 || cfg.T < 1) throw spec_error("gen_uniform_bounded: need d, T >= 1");
  if (cfg.X < 0 || cfg.Y < 0) throw spec_error("gen_uniform_bounded: negative bounds");
  const std::uint64_t sx = derived_seed(cfg.seed, kTagInputs);
  const std::uint64_t sy = derived_seed(cfg.seed, kTagNoise);
  Stream rounds(cfg.T);
  for (long t = 0; t < cfg.T; ++t) {
    Round& r = rounds[t];
    r.x.resize(cfg.d);
    for (long j = 0; j < cfg.d; ++j) {
      r.x[j] = cfg.X * (2.0 * counter_uniform01(sx, std::uint64_t(t) * cfg.d + j) - 1.0);
      require_bounded(r.x[j], cfg.X, "|x| <= X");
    }
    r.y = cfg.Y * (2.0 * counter_uniform01(sy, std::uint64_t(t)) - 1.0);
    require_bounded(r.y, cfg.Y, "|y| <= Y");
  }
  return rounds;
}

SparseStream gen_sparse_linear(const StreamConfig& cfg, long sparsity, double noise) {
  if (sparsity < 1 || sparsity > cfg.d)
    throw spec_error("gen_sparse_linear: need 1 <= sparsity <= d");
  if (noise < 0) throw spec_error("gen_sparse_linear: negative noise");

  const std::uint64_t ss = derived_seed(cfg.seed, kTagSupport);
  // Partial Fisher-Yates for a seeded random support of the requested size.
  std::vector<long> order(cfg.d);
  for (long j = 0; j < cfg.d; ++j) order[j] = j;
  for (long i = 0; i < sparsity; ++i) {
    const long pick =
        i + long(counter_uniform01(ss, std::uint64_t(i)) * double(cfg.d - i));
    std::swap(order[i], order[std::min(pick, cfg.d - 1)]);
  }
  Vector u = Vector::Zero(cfg.d);
  double mass = 0.0;
  for (long i = 0; i < sparsity; ++i) {
    u[order[i]] = 2.0 * counter_uniform01(ss, 0x10000 + std::uint64_t(i)) - 1.0;
    mass += std::abs(u[order[i]]);
  }
  if (mass == 0.0) {
    u[order[0]] = 1.0;
    mass = 1.0;
  }
  u /= mass;  // ||u||_1 = 1

  const std::uint64_t sx = derived_seed(cfg.seed, kTagInputs);
  const std::uint64_t se = derived_seed(cfg.seed, kTagNoise);
  SparseStream out;
  out.u_star = u;
  out.rounds.resize(cfg.T);
  for (long t = 0; t < cfg.T; ++t) {
    Round& r = out.rounds[t];
    r.x.resize(cfg.d);
    for (long j = 0; j < cfg.d; ++j)
      r.x[j] = cfg.X * (2.0 * counter_uniform01(sx, std::uint64_t(t) * cfg.d + j) - 1.0);
    const double eps = noise > 0 ? counter_normal(se, std::uint64_t(t)) : 0.0;
    r.y = clip(u.dot(r.x) + noise * eps, cfg.Y);
    require_bounded(r.y, cfg.Y, "|y| <= Y");
  }
  return out;
}

Stream gen_sinusoidal_model(const StreamConfig& cfg, const Vector& u, double gamma,
                            double sigma) {
  if (u.size() != cfg.d) throw spec_error("gen_sinusoidal_model: dimension mismatch");
  if (u.lpNorm<1>() > 1.0)
    throw spec_error("gen_sinusoidal_model: need ||u||_1 <= 1");
  if (!(gamma > 0) || sigma < 0)
    throw spec_error("gen_sinusoidal_model: need gamma > 0, sigma >= 0");

  const std::uint64_t st = derived_seed(cfg.seed, kTagInputs);
  const std::uint64_t se = derived_seed(cfg.seed, kTagNoise);
  const double pi = std::acos(-1.0);
  const double amplitude = gamma * std::sqrt(2.0);
  Stream rounds(cfg.T);
  for (long t = 0; t < cfg.T; ++t) {
    Round& r = rounds[t];
    const double theta = pi * (2.0 * counter_uniform01(st, std::uint64_t(t)) - 1.0);
    r.x.resize(cfg.d);
    for (long j = 0; j < cfg.d; ++j) {
      r.x[j] = amplitude * std::sin(double(j + 1) * theta);
      require_bounded(r.x[j], amplitude, "|x| <= gamma sqrt(2)");
    }
    const double eps = sigma > 0 ? counter_normal(se, std::uint64_t(t)) : 0.0;
    r.y = u.dot(r.x) + sigma * eps;
  }
  return rounds;
}

}  // namespace ell1
