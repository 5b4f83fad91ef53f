#ifndef WSM_GENMODEL_HPP
#define WSM_GENMODEL_HPP

#include <cstdint>
#include <random>

#include "wsm/types.hpp"
#include "wsm/weighted_string.hpp"

namespace wsm {

// Deterministic random helper; all derived draws go through the two
// primitives below so output is reproducible across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Unbiased draw from [0, n).
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = (0 - n) % n;   // 2^64 mod n
        for (;;) {
            const std::uint64_t r = engine_();
            if (r >= limit) return r % n;
        }
    }

    // Uniform double in [0, 1).
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

// Random weighted string under the uniform-subset randomness model: each
// position draws a uniformly random non-empty subset of the alphabet (or,
// with probability solid_bias, a single uniform letter) and distributes
// probability over the subset by symmetric Dirichlet(1) weights. Singleton
// subsets come out solid with probability exactly 1.
// Requires 2 <= sigma <= 62; deterministic given the seed.
WeightedString gen_weighted(std::size_t n, std::uint32_t sigma,
                            std::uint64_t seed, double solid_bias);

// Uniform i.i.d. letters; deterministic given the seed.
Symbols gen_solid(std::size_t n, std::uint32_t sigma, std::uint64_t seed);

// Monte-Carlo estimate of the expected length of the longest matching
// prefix between a uniform solid string and an indeterminate string of
// uniform non-empty subsets (probabilities ignored; positionwise subset
// membership only). The per-position match probability is
// r = 2^(sigma-1) / (2^sigma - 1), so the mean tends to r / (1 - r).
double lcp_experiment(std::uint32_t sigma, std::uint64_t trials,
                      std::uint64_t seed);

} // namespace wsm

#endif
