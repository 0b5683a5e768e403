#pragma once

#include <cmath>
#include <cstdint>

namespace hheat {

/// Minimal splittable RNG: a splitmix64 state per stream. Streams for sample
/// m are derived from (master_seed, m) by a counter-based mix, so parallel
/// consumers get identical draws regardless of scheduling or thread count.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in (0, 1]; never exactly 0 so log() stays finite.
  double next_unit() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller (branch-free, fixed two draws per call).
  double next_gaussian() {
    const double u1 = next_unit();
    const double u2 = next_unit();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
  }

 private:
  std::uint64_t state_;
};

/// Stream for the `index`-th sample under `master`.
inline Rng stream_rng(std::uint64_t master, std::uint64_t index) {
  // one splitmix scramble of the pair keeps streams decorrelated
  Rng mixer(master ^ (0x9e3779b97f4a7c15ull * (index + 1)));
  return Rng(mixer.next_u64());
}

}  // namespace hheat
