#ifndef LFC_RNG_HPP
#define LFC_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>

namespace lfc {

/// Counter-based generator: output i of stream s under seed m is a hash
/// of (m, s, i), so any (frame, draw) is reproducible independently of
/// batch partitioning.  Gaussians come from Box-Muller on consecutive
/// counter outputs.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(mix(mix(seed) ^ (0x9e3779b97f4a7c15ULL * (stream + 1)))) {}

  /// Uniform draw in the open interval (0,1).
  double uniform() {
    const std::uint64_t bits = mix(key_ + 0xd1342543de82ef95ULL * ++counter_);
    return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Standard normal draw.
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  // splitmix64 finalizer
  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace lfc

#endif
