#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace ringsense {

/// Deterministic random source. Every stochastic routine in the library
/// draws through this wrapper instead of the <random> distribution classes,
/// whose output sequences are implementation-defined. A fixed seed therefore
/// reproduces a run bit for bit.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Box-Muller, no caching: two engine draws per sample so that the
    /// stream position never depends on the history of calls.
    double normal(double mean, double stddev) {
        const double u = 1.0 - uniform();  // (0, 1], keeps the log finite
        const double v = uniform();
        const double mag = std::sqrt(-2.0 * std::log(u));
        return mean + stddev * mag * std::cos(2.0 * kPi * v);
    }

    bool bernoulli(double p) { return uniform() < p; }

    /// Uniform integer in [0, n). n must be positive.
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

private:
    static constexpr double kPi = 3.141592653589793238462643383279502884;
    std::mt19937_64 engine_;
};

}  // namespace ringsense
