#include "fairaudit/rng.hpp"

#include <cmath>

#include "fairaudit/errors.hpp"

namespace fairaudit {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;

inline std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ull;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebull;
  x ^= x >> 31;
  return x;
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_(stream_id) {
  state_ = mix64(mix64(seed + kGolden) ^ mix64(stream_id + 0x6a09e667f3bcc909ull));
}

std::uint64_t RngStream::next_u64() {
  state_ += kGolden;
  return mix64(state_);
}

std::uint64_t RngStream::bounded(std::uint64_t n) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
}

double RngStream::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::next_normal() {
  // u1 in (0,1] keeps the log finite.
  const double u1 = 1.0 - next_double();
  const double u2 = next_double();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * 3.14159265358979323846 * u2);
}

RngStream RngStream::substream(std::uint64_t id) const {
  return RngStream(mix64(seed_ ^ mix64(stream_ + kGolden)), id);
}

double sample_gamma(RngStream& rng, double shape) {
  require(shape > 0.0 && std::isfinite(shape), Errc::InvalidArgument,
          "gamma shape must be positive");
  if (shape < 1.0) {
    // Stuart's theorem: G(a) = G(a+1) * U^(1/a).
    const double u = 1.0 - rng.next_double();
    return sample_gamma(rng, shape + 1.0) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = rng.next_normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.next_double();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) {
      return d * v;
    }
  }
}

double sample_beta(RngStream& rng, double a, double b) {
  require(a > 0.0 && b > 0.0, Errc::InvalidArgument,
          "beta shapes must be positive");
  const double g1 = sample_gamma(rng, a);
  const double g2 = sample_gamma(rng, b);
  double x = (g1 + g2 > 0.0) ? g1 / (g1 + g2) : 0.5;
  constexpr double kLo = 0x1.0p-53;
  constexpr double kHi = 1.0 - 0x1.0p-53;
  if (x < kLo) x = kLo;
  if (x > kHi) x = kHi;
  return x;
}

}  // namespace fairaudit
