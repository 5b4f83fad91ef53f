#include <numeric>

#include "doctest.h"
#include "helpers.hpp"

#include "wsm/engines.hpp"

using namespace wsm;
using namespace wsm::testutil;

namespace {

const Alphabet kDna("ACGT");

PlainText text_of(const char* letters) {
    return PlainText(kDna.encode(letters), 4);
}

// Random symbols over [0, sigma], where the value sigma plays the sentinel.
Symbols random_symbols_with_sentinel(Rng& rng, std::size_t n,
                                     std::uint32_t sigma, double sentinel_prob) {
    Symbols out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rng.unit() < sentinel_prob)
            out.push_back(static_cast<Symbol>(sigma));
        else
            out.push_back(static_cast<Symbol>(rng.below(sigma)));
    }
    return out;
}

} // namespace

TEST_CASE("find_all on the worked examples") {
    InspectionCounter ctr;
    CHECK(find_all(kDna.encode("AAA"), 4, text_of("CAAAA"), ctr) ==
          std::vector<std::size_t>{1, 2});
    CHECK(find_all(kDna.encode("ACT"), 4, text_of("GACTA"), ctr) ==
          std::vector<std::size_t>{1});
    CHECK(find_all(kDna.encode("G"), 4, text_of("AAAA"), ctr).empty());
    CHECK(ctr.chars_inspected > 0);
}

TEST_CASE("sentinel letters mismatch every pattern") {
    // y' = "A<lambda>C" with lambda encoded as index sigma = 4
    PlainText text(Symbols{0, 4, 1}, 4);
    InspectionCounter ctr;
    CHECK_THROWS_AS(find_all(Symbols{4}, 4, text, ctr), Error);   // patterns live in the alphabet
    CHECK(find_all(Symbols{0, 1}, 4, text, ctr).empty());
    CHECK(find_all(Symbols{0}, 4, text, ctr) == std::vector<std::size_t>{0});
}

TEST_CASE("find_all_multi on the worked examples") {
    InspectionCounter ctr;
    PlainText y_prime(Symbols{0, 4, 1}, 4);   // A lambda C
    auto hits = find_all_multi({Symbols{0}, Symbols{1}}, 4, y_prime, ctr);
    CHECK(hits == std::vector<std::pair<std::size_t, std::uint32_t>>{{0, 0}, {2, 1}});

    PlainText abab(Alphabet("AB").encode("ABAB"), 2);
    CHECK(find_all_multi({Alphabet("AB").encode("AB")}, 2, abab, ctr) ==
          std::vector<std::pair<std::size_t, std::uint32_t>>{{0, 0}, {2, 0}});

    PlainText shorty(Symbols{0}, 4);
    CHECK(find_all_multi({Symbols{0, 1}, Symbols{1, 2}}, 4, shorty, ctr).empty());
}

TEST_CASE("engines agree with the naive scanner on random instances") {
    Rng rng(2025);
    int single = 0, multi = 0;
    while (single + multi < 10000) {
        const std::uint32_t sigma = std::array<std::uint32_t, 3>{2, 4, 20}[rng.below(3)];
        const std::size_t n = 20 + rng.below(140);
        const double sentinel_prob = rng.unit() < 0.3 ? 0.1 : 0.0;
        const Symbols text = random_symbols_with_sentinel(rng, n, sigma, sentinel_prob);
        const PlainText plain(text, sigma);

        if (rng.unit() < 0.5) {
            // drawing from the text half the time guarantees real matches
            const std::size_t len = 1 + rng.below(12);
            Symbols pattern;
            if (rng.unit() < 0.5 && len <= n) {
                const std::size_t at = rng.below(n - len + 1);
                pattern.assign(text.begin() + at, text.begin() + at + len);
                bool clean = true;
                for (Symbol s : pattern) clean = clean && s < sigma;
                if (!clean) continue;
            } else {
                for (std::size_t j = 0; j < len; ++j)
                    pattern.push_back(static_cast<Symbol>(rng.below(sigma)));
            }
            InspectionCounter ctr;
            CHECK(find_all(pattern, sigma, plain, ctr) == naive_find(pattern, text));
            ++single;
        } else {
            const std::size_t count = 1 + rng.below(6);
            std::vector<Symbols> patterns;
            const std::size_t base = 1 + rng.below(8);
            for (std::size_t k = 0; k < count; ++k) {
                const std::size_t len = base + rng.below(2);
                Symbols p;
                if (rng.unit() < 0.4 && len <= n) {
                    const std::size_t at = rng.below(n - len + 1);
                    p.assign(text.begin() + at, text.begin() + at + len);
                    bool clean = true;
                    for (Symbol s : p) clean = clean && s < sigma;
                    if (!clean) {
                        p.clear();
                        for (std::size_t j = 0; j < len; ++j)
                            p.push_back(static_cast<Symbol>(rng.below(sigma)));
                    }
                } else {
                    for (std::size_t j = 0; j < len; ++j)
                        p.push_back(static_cast<Symbol>(rng.below(sigma)));
                }
                patterns.push_back(std::move(p));
            }
            InspectionCounter ctr;
            CHECK(find_all_multi(patterns, sigma, plain, ctr) ==
                  naive_find_multi(patterns, text));
            ++multi;
        }
    }
    CHECK(single > 3000);
    CHECK(multi > 3000);
}

TEST_CASE("inspected characters per text letter drop as patterns double") {
    const std::uint32_t sigma = 4;
    const std::size_t n = 200000;
    const int trials = 20;

    double mean[3] = {};
    const std::size_t lengths[3] = {16, 32, 64};
    Rng rng(31337);
    for (int trial = 0; trial < trials; ++trial) {
        const PlainText text(gen_solid(n, sigma, rng.next()), sigma);
        for (int k = 0; k < 3; ++k) {
            const Symbols pattern = gen_solid(lengths[k], sigma, rng.next());
            InspectionCounter ctr;
            SkipSearcher(pattern, sigma).find_all(text, ctr);
            mean[k] += static_cast<double>(ctr.chars_inspected) / n;
        }
    }
    for (double& v : mean) v /= trials;
    CHECK(mean[0] > mean[1]);
    CHECK(mean[1] > mean[2]);
    CHECK(mean[2] < 0.5);   // far below one read per letter
}

TEST_CASE("counters grow monotonically and candidates cover matches") {
    Rng rng(8);
    InspectionCounter ctr;
    std::uint64_t last_chars = 0;
    for (int it = 0; it < 50; ++it) {
        const Symbols text = random_symbols_with_sentinel(rng, 500, 4, 0.05);
        const Symbols pattern = gen_solid(1 + rng.below(6), 4, rng.next());
        const PlainText plain(text, 4);
        const auto matches = find_all(pattern, 4, plain, ctr);
        CHECK(ctr.chars_inspected >= last_chars);
        CHECK(ctr.candidates >= matches.size());
        last_chars = ctr.chars_inspected;
    }
}
