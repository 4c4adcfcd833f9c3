#pragma once

#include <cstdint>
#include <random>

namespace gfss {

// Deterministic random stream: the mt19937_64 word sequence is fixed by the
// C++ standard and every variate transform below is implemented here, so a
// seed pins the full output bit-for-bit across runs and thread counts.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  /// Replicate-level seed derivation: seed XOR splitmix64(index).
  static std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1).
  double uniform();
  /// Uniform on {0, 1, ..., n-1} by rejection (unbiased).
  std::uint64_t uniform_index(std::uint64_t n);

  double normal();
  /// Gamma(shape, 1). Marsaglia-Tsang squeeze; shape < 1 boosted via U^{1/shape}.
  double gamma(double shape);
  double beta(double a, double b);
  /// Exact Poisson: inversion for small mean, Atkinson rejection for large.
  long poisson(double mean);

 private:
  std::mt19937_64 engine_;
};

}  // namespace gfss
