#pragma once

#include <cmath>
#include <cstdint>

namespace econet {

/// SplitMix64: a seedable 64-bit generator with a counter-based core, fixed
/// here so that identical (params, seed) inputs reproduce identical streams
/// across platforms. Substreams are derived by hashing (seed, stream index).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    /// Independent substream for replication `index` of a seeded experiment.
    static Rng substream(std::uint64_t seed, std::uint64_t index) {
        Rng mix(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
        mix.next_u64();
        return mix;
    }

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform on [0, 1).
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform on (0, 1], as required by inverse-transform sampling.
    double uniform_open_closed() { return 1.0 - uniform01(); }

    /// Standard normal via Box-Muller (one value per call, no caching, so
    /// streams stay reproducible regardless of call interleaving).
    double normal() {
        const double u1 = uniform_open_closed();
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
    }

  private:
    std::uint64_t state_;
};

}  // namespace econet
