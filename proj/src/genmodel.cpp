#include "wsm/genmodel.hpp"

#include <bit>
#include <cmath>

#include "wsm/errors.hpp"

namespace wsm {

namespace {

void check_sigma(std::uint32_t sigma) {
    if (sigma < 2 || sigma > 62)
        throw Error("generator supports alphabet sizes 2..62");
}

// Standard exponential, floored away from zero so subset letters keep a
// strictly positive probability.
double exponential(Rng& rng) {
    const double g = -std::log1p(-rng.unit());
    return g > 0.0 ? g : 1e-300;
}

} // namespace

WeightedString gen_weighted(std::size_t n, std::uint32_t sigma,
                            std::uint64_t seed, double solid_bias) {
    check_sigma(sigma);
    if (solid_bias < 0.0 || solid_bias > 1.0)
        throw Error("solid bias must be in [0, 1]");
    if (n == 0)
        throw Error("cannot generate an empty weighted string");

    Rng rng(seed);
    const std::uint64_t subsets = (std::uint64_t{1} << sigma) - 1;

    WeightedString::Builder builder(Alphabet::generic(sigma), n);
    std::vector<WeightedEntry> entries;
    for (std::size_t i = 0; i < n; ++i) {
        if (solid_bias > 0.0 && rng.unit() < solid_bias) {
            builder.add_solid(static_cast<Symbol>(rng.below(sigma)));
            continue;
        }
        const std::uint64_t mask = 1 + rng.below(subsets);
        if (std::popcount(mask) == 1) {
            builder.add_solid(static_cast<Symbol>(std::countr_zero(mask)));
            continue;
        }
        entries.clear();
        double sum = 0.0;
        for (std::uint32_t a = 0; a < sigma; ++a) {
            if (!(mask >> a & 1)) continue;
            const double g = exponential(rng);
            entries.push_back({static_cast<Symbol>(a), g});
            sum += g;
        }
        for (auto& e : entries) e.prob /= sum;
        builder.add_position(entries);
    }
    return builder.build();
}

Symbols gen_solid(std::size_t n, std::uint32_t sigma, std::uint64_t seed) {
    check_sigma(sigma);
    Rng rng(seed);
    Symbols out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(static_cast<Symbol>(rng.below(sigma)));
    return out;
}

double lcp_experiment(std::uint32_t sigma, std::uint64_t trials,
                      std::uint64_t seed) {
    check_sigma(sigma);
    if (trials == 0)
        throw Error("trial count must be positive");

    Rng rng(seed);
    const std::uint64_t subsets = (std::uint64_t{1} << sigma) - 1;
    // Matching prefixes are geometric with ratio <= 2/3; 512 positions
    // truncate a tail far below any measurable bias.
    constexpr std::uint64_t kCap = 512;

    std::uint64_t total = 0;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        std::uint64_t len = 0;
        while (len < kCap) {
            const std::uint64_t letter = rng.below(sigma);
            const std::uint64_t mask = 1 + rng.below(subsets);
            if (!(mask >> letter & 1)) break;
            ++len;
        }
        total += len;
    }
    return static_cast<double>(total) / static_cast<double>(trials);
}

} // namespace wsm
