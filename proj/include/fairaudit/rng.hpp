#pragma once

#include <cstdint>

namespace fairaudit {

// Counter-seeded splittable generator built on the splitmix64 finalizer.
// Identical (seed, stream_id) pairs reproduce identical draw sequences on any
// platform: the integer substrate is exact, and derived real-valued draws
// depend only on it plus libm.
class RngStream {
 public:
  RngStream() : RngStream(0, 0) {}
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_; }

  std::uint64_t next_u64();

  // Uniform integer in [0, n) via the Lemire multiply-shift map;
  // rejection-free, so the draw count per call is fixed.
  std::uint64_t bounded(std::uint64_t n);

  // Uniform in [0, 1) with 53 random bits.
  double next_double();

  // Standard normal via Box-Muller; consumes exactly two uniforms.
  double next_normal();

  // Child stream for replicate/draw `id`; draws are independent of the
  // parent's position and of sibling streams.
  RngStream substream(std::uint64_t id) const;

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t state_;
};

// Gamma(shape, 1) via Marsaglia-Tsang squeeze for shape >= 1 and the
// power-of-uniform boost for shape < 1.
double sample_gamma(RngStream& rng, double shape);

// Beta(a, b) as a ratio of two Gamma variates, clamped to
// [2^-53, 1 - 2^-53] so draws are strictly inside (0, 1).
double sample_beta(RngStream& rng, double a, double b);

}  // namespace fairaudit
