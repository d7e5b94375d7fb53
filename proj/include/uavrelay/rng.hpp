// Deterministic counter-friendly random streams. splitmix64 seeded per
// sample keeps results independent of thread count and iteration order.
#ifndef UAVRELAY_RNG_HPP
#define UAVRELAY_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>

namespace uavrelay {

struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in (0, 1]; never returns 0 so logs are safe.
    double uniform01() { return ((next() >> 11) + 1.0) * 0x1.0p-53; }

    /// Standard normal via Box-Muller.
    double gaussian() {
        const double u = uniform01();
        const double v = uniform01();
        return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * M_PI * v);
    }

    /// Circularly symmetric complex Gaussian with the given mean square.
    std::complex<double> complex_gaussian(double mean_square = 1.0) {
        const double s = std::sqrt(mean_square / 2.0);
        return {s * gaussian(), s * gaussian()};
    }
};

/// Independent substream for one (seed, index) pair.
inline SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mix(seed ^ (0x632be59bd9b4e019ULL * (index + 1)));
    mix.next();  // decorrelate nearby indices
    return mix;
}

}  // namespace uavrelay

#endif
