#ifndef PROXPAIR_SAMPLING_HPP
#define PROXPAIR_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace proxpair {

inline constexpr std::uint64_t kDefaultSeed = 20160412;

/// Deterministic sampler for hull coefficients and generic uniforms. The
/// transformations from raw engine output to doubles are hand-rolled so a
/// given seed produces the same stream on every standard library.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Strictly positive exponential variate (rate 1).
  double exponential();

  /// Symmetric Dirichlet(1) sample: uniform on the probability simplex.
  std::vector<double> simplex_coefficients(std::size_t count);

  /// Dirichlet sample scaled by an independent uniform factor in [0, 1]:
  /// uniform-ish over the sub-simplex (sum <= 1).
  std::vector<double> sub_simplex_coefficients(std::size_t count);

 private:
  std::mt19937_64 engine_;
};

}  // namespace proxpair

#endif  // PROXPAIR_SAMPLING_HPP
