#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

namespace heigen {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// mt19937_64 is fully specified by the standard, so the raw sequence is the
// same everywhere; the floating point transforms below avoid std::*_distribution
// whose algorithms are implementation defined.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0)
      : seed_(seed), stream_(stream), eng_(seed ^ splitmix64(stream)) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  std::uint64_t next_u64() { return eng_(); }

  // [0, 1)
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  // (0, 1], safe for log
  double uniform_pos() { return static_cast<double>((eng_() >> 11) + 1) * 0x1.0p-53; }

  // standard complex Gaussian: real and imaginary parts N(0, 1/2)
  std::complex<double> complex_normal() {
    const double r = std::sqrt(-std::log(uniform_pos()));
    const double t = 2 * std::numbers::pi * uniform();
    return {r * std::cos(t), r * std::sin(t)};
  }

  // Exp(1) by inversion
  double exponential() { return -std::log(uniform_pos()); }

 private:
  std::uint64_t seed_, stream_;
  std::mt19937_64 eng_;
};

}  // namespace heigen
