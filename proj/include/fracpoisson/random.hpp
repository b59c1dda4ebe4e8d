#pragma once

#include <array>
#include <cstdint>

namespace fracpoisson {

/// Seedable, splittable random source.
///
/// A (seed, stream) pair fully determines the output sequence. Monte Carlo
/// drivers give sample i the stream `base + i`, so a result never depends on
/// how samples are partitioned across worker threads. Variates are produced
/// with explicit transforms (no std:: distributions) so sequences are
/// identical across standard library implementations.
class RandomSource {
 public:
  RandomSource(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream() const noexcept { return stream_; }

  std::uint64_t next_u64() noexcept;

  /// Uniform on the open interval (0, 1), 53-bit resolution.
  double uniform() noexcept;
  /// Uniform on (a, b).
  double uniform(double a, double b) noexcept { return a + (b - a) * uniform(); }
  /// Unit-mean exponential.
  double exponential() noexcept;
  /// Standard normal (Box-Muller, one value per call).
  double normal() noexcept;
  /// Poisson(mean) by inversion for small means, by unit-rate exponential spacings otherwise.
  std::uint64_t poisson(double mean);

  /// Child source for a sub-task; deterministic in (seed, stream, child).
  RandomSource split(std::uint64_t child) const;

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::array<std::uint64_t, 4> state_;
};

}  // namespace fracpoisson
