#include "wsm/bench.hpp"

#include <cmath>

#include "wsm/colouring.hpp"
#include "wsm/genmodel.hpp"
#include "wsm/threshold.hpp"
#include "wsm/wpm.hpp"
#include "wsm/wtm.hpp"

namespace wsm::bench {

namespace {

constexpr std::size_t kPatternLengths[] = {16, 32, 64};
constexpr double kSolidBias = 0.9;

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b,
                          std::uint64_t c) {
    std::uint64_t h = base ^ 0x9E3779B97F4A7C15ull;
    for (std::uint64_t v : {a, b, c}) {
        h ^= v + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
        h *= 0xBF58476D1CE4E5B9ull;
    }
    return h;
}

// Weighted pattern for the wpm measurements; redrawn in the (practically
// impossible) case that every position comes out black.
WeightedString draw_wpm_pattern(std::size_t m, std::uint32_t sigma,
                                const Threshold& t, std::uint64_t seed) {
    for (std::uint64_t attempt = 0;; ++attempt) {
        WeightedString x = gen_weighted(m, sigma, seed + attempt, kSolidBias);
        if (colour_positions(x, t).black_count < m) return x;
    }
}

} // namespace

std::vector<LcpRow> lcp_suite(std::uint64_t trials, std::uint64_t seed) {
    std::vector<LcpRow> rows;
    for (std::uint32_t sigma : {2u, 3u, 4u, 8u}) {
        const double r = std::exp2(static_cast<double>(sigma) - 1.0) /
                         (std::exp2(static_cast<double>(sigma)) - 1.0);
        rows.push_back({sigma, trials,
                        lcp_experiment(sigma, trials, derive_seed(seed, sigma, 0, 0)),
                        r / (1.0 - r), 6.0});
    }
    return rows;
}

std::vector<SublinearityRow> sublinearity_suite(std::size_t n, unsigned seeds,
                                                double z, std::uint32_t sigma,
                                                std::uint64_t seed) {
    const Threshold t(z);
    std::vector<SublinearityRow> rows;

    for (std::size_t m : kPatternLengths) {
        double chars = 0.0, cands = 0.0;
        for (unsigned k = 0; k < seeds; ++k) {
            const WeightedString x =
                draw_wpm_pattern(m, sigma, t, derive_seed(seed, 1, m, k));
            PlainText y(gen_solid(n, sigma, derive_seed(seed, 2, m, k)), sigma);
            const MatchReport r = wpm_search(x, y, t);
            chars += static_cast<double>(r.counters.chars_inspected) / n;
            cands += static_cast<double>(r.counters.candidates) / n;
        }
        rows.push_back({"wpm", m, n, sigma, z, seeds, chars / seeds, cands / seeds});
    }

    for (std::size_t m : kPatternLengths) {
        double chars = 0.0, cands = 0.0;
        for (unsigned k = 0; k < seeds; ++k) {
            const Symbols x = gen_solid(m, sigma, derive_seed(seed, 3, m, k));
            const WeightedString y =
                gen_weighted(n, sigma, derive_seed(seed, 4, m, k), kSolidBias);
            const MatchReport r = wtm_search(x, y, t);
            chars += static_cast<double>(r.counters.chars_inspected) / n;
            cands += static_cast<double>(r.counters.candidates) / n;
        }
        rows.push_back({"wtm", m, n, sigma, z, seeds, chars / seeds, cands / seeds});
    }
    return rows;
}

std::vector<OccurrenceRow> occurrences_suite(std::size_t n, unsigned seeds,
                                             double z, std::uint32_t sigma,
                                             std::uint64_t seed) {
    const Threshold t(z);
    std::vector<OccurrenceRow> rows;
    for (std::size_t m : kPatternLengths) {
        for (unsigned k = 0; k < seeds; ++k) {
            const WeightedString x =
                draw_wpm_pattern(m, sigma, t, derive_seed(seed, 1, m, k));
            PlainText y(gen_solid(n, sigma, derive_seed(seed, 2, m, k)), sigma);
            const MatchReport r = wpm_search(x, y, t);

            const std::size_t ell_prime = colour_positions(x, t).black_count;
            const double bound =
                4.0 * std::pow(static_cast<double>(sigma),
                               -std::floor(static_cast<double>(m) /
                                           (static_cast<double>(ell_prime) + 1.0)));
            rows.push_back({m, k, n, ell_prime, r.counters.candidates,
                            static_cast<double>(r.counters.candidates) / n, bound});
        }
    }
    return rows;
}

} // namespace wsm::bench
