#pragma once

#include "ell1/core.hpp"

#include <cstdint>

namespace ell1 {

/// Generator configuration.  Streams are pure functions of (seed, index):
/// the same config always reproduces the same stream, bit for bit.
struct StreamConfig {
  long d = 1;
  long T = 1;
  double X = 1.0;
  double Y = 1.0;
  std::uint64_t seed = 0;
};

/// Counter-based 64-bit generator: the splitmix64 finalizer applied to
/// seed + (counter+1) * golden-ratio increment.  Pure in (seed, counter),
/// so any element of a stream can be produced independently.
std::uint64_t counter_bits(std::uint64_t seed, std::uint64_t counter);

/// Uniform draw in the open interval (0, 1).
double counter_uniform01(std::uint64_t seed, std::uint64_t counter);

/// Standard normal draw via a rational inverse-CDF approximation
/// (coefficients in the implementation; relative error below 1.2e-9).
double counter_normal(std::uint64_t seed, std::uint64_t counter);

/// x entries i.i.d. uniform on [-X, X], y uniform on [-Y, Y].
Stream gen_uniform_bounded(const StreamConfig& cfg);

struct SparseStream {
  Stream rounds;
  Vector u_star;  // planted coefficient vector, ||u_star||_1 = 1
};

/// Planted sparse linear model: y_t = clip(u_star . x_t + noise * eps_t, Y)
/// with x as in gen_uniform_bounded and a seeded random support of the given
/// size.
SparseStream gen_sparse_linear(const StreamConfig& cfg, long sparsity, double noise);

/// Sinusoidal feature model: theta_t uniform on [-pi, pi],
/// x_t = gamma * sqrt(2) * (sin(j theta_t))_{j=1..d}, y_t = u . x_t + sigma eps_t.
/// Requires ||u||_1 <= 1; guarantees ||x_t||_inf <= gamma sqrt(2).
Stream gen_sinusoidal_model(const StreamConfig& cfg, const Vector& u, double gamma,
                            double sigma);

}  // namespace ell1
