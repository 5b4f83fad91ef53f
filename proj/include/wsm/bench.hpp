#ifndef WSM_BENCH_HPP
#define WSM_BENCH_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace wsm::bench {

// Desk-scale measurements backing the average-case claims. All suites are
// deterministic given the base seed.

struct LcpRow {
    std::uint32_t sigma;
    std::uint64_t trials;
    double mean;       // measured mean matching-prefix length
    double expected;   // r / (1 - r) with r = 2^(sigma-1)/(2^sigma - 1)
    double bound;      // 6, from the analysis
};

std::vector<LcpRow> lcp_suite(std::uint64_t trials, std::uint64_t seed);

struct SublinearityRow {
    std::string algo;   // "wpm" or "wtm"
    std::size_t m;
    std::size_t n;
    std::uint32_t sigma;
    double z;
    unsigned seeds;
    double chars_per_n;        // mean filtration accesses per text letter
    double candidates_per_n;   // mean verified windows per text letter
};

// Uniform random plain text for wpm (weighted patterns, solid bias 0.9);
// generated weighted text with solid bias 0.9 for wtm (solid patterns).
// m runs over {16, 32, 64}.
std::vector<SublinearityRow> sublinearity_suite(std::size_t n, unsigned seeds,
                                                double z, std::uint32_t sigma,
                                                std::uint64_t seed);

struct OccurrenceRow {
    std::size_t m;
    unsigned seed_index;
    std::size_t n;
    std::size_t ell_prime;     // black positions in the drawn pattern
    std::uint64_t candidates;
    double candidates_per_n;
    double bound;              // 4 * sigma^(-floor(m / (ell' + 1)))
};

// Verified-candidate density for wpm under the sublinearity conditions,
// against the expected-occurrence bound.
std::vector<OccurrenceRow> occurrences_suite(std::size_t n, unsigned seeds,
                                             double z, std::uint32_t sigma,
                                             std::uint64_t seed);

} // namespace wsm::bench

#endif
