#include "fracpoisson/random.hpp"

#include <cmath>
#include <numbers>

namespace fracpoisson {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) noexcept {
  std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept { return (x << k) | (x >> (64 - k)); }

}  // namespace

RandomSource::RandomSource(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {
  // Two rounds of splitmix64 over (seed, stream).
  std::uint64_t x = seed;
  std::uint64_t key = splitmix64(x);
  x = key ^ (stream * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL);
  for (auto& word : state_) word = splitmix64(x);
  if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
}

std::uint64_t RandomSource::next_u64() noexcept {
  const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double RandomSource::uniform() noexcept {
  // (k + 0.5) / 2^53 never hits 0 or 1.
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double RandomSource::exponential() noexcept { return -std::log(uniform()); }

double RandomSource::normal() noexcept {
  const double r = std::sqrt(-2.0 * std::log(uniform()));
  return r * std::cos(2.0 * std::numbers::pi * uniform());
}

std::uint64_t RandomSource::poisson(double mean) {
  if (!(mean > 0.0)) return 0;
  if (mean < 30.0) {
    const double limit = std::exp(-mean);
    double prod = uniform();
    std::uint64_t k = 0;
    while (prod > limit) {
      prod *= uniform();
      ++k;
    }
    return k;
  }
  // Count unit-rate arrivals in [0, mean]; exact, cost O(mean).
  std::uint64_t k = 0;
  double t = exponential();
  while (t <= mean) {
    ++k;
    t += exponential();
  }
  return k;
}

RandomSource RandomSource::split(std::uint64_t child) const {
  std::uint64_t x = stream_ ^ (child * 0x9e3779b97f4a7c15ULL);
  return RandomSource(seed_ ^ splitmix64(x), child + 0x632be59bd9b4e019ULL * (stream_ + 1));
}

}  // namespace fracpoisson
