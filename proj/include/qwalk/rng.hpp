#pragma once

// Deterministic random number utilities.
//
// All stochastic code in the library draws from Rng so that a run is fully
// reproducible from a single 64-bit seed, bit-for-bit across platforms.
// std::mt19937_64 is used as the engine because the standard specifies its
// output sequence exactly; the standard *distributions* are implementation
// defined, so uniform doubles are produced here from raw engine output
// instead of std::uniform_real_distribution.

#include <cstdint>
#include <random>
#include <stdexcept>

namespace qwalk {

// One step of the splitmix64 generator; also a good 64-bit mixer.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Derives an independent stream seed from a master seed and a stream index.
// Used to give every run in a multi-run experiment its own generator while
// keeping the whole experiment a function of one master seed.
inline std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t s = master;
    std::uint64_t a = splitmix64_next(s);
    s = master ^ (0xd1342543de82ef95ULL * (index + 1));
    std::uint64_t b = splitmix64_next(s);
    return a ^ (b + 0x9e3779b97f4a7c15ULL * index);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t raw() { return engine_(); }

    // Uniform double in [0, 1), 53 significant bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform();
    }

    // Uniform integer in [0, n).
    std::uint64_t index(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("Rng::index: n must be positive");
        // Rejection sampling to avoid modulo bias.
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    bool bernoulli(double p) { return uniform() < p; }

private:
    std::mt19937_64 engine_;
};

}  // namespace qwalk
