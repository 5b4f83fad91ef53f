#include <cmath>

#include "doctest.h"
#include "helpers.hpp"

#include "wsm/bounds.hpp"
#include "wsm/errors.hpp"
#include "wsm/oracle.hpp"
#include "wsm/wpm.hpp"

using namespace wsm;
using namespace wsm::testutil;

namespace {

const Alphabet kDna("ACGT");

PlainText dna_text(const char* letters) {
    return PlainText(kDna.encode(letters), 4);
}

} // namespace

TEST_CASE("wpm_search worked examples") {
    const Threshold z2(2.0);

    auto x1 = make_ws(kDna, {{{'A', 1.0}}, {{'C', 0.6}, {'G', 0.4}}, {{'T', 1.0}}});
    const auto r1 = wpm_search(x1, dna_text("GACTA"), z2);
    CHECK(r1.positions == std::vector<std::size_t>{1});
    CHECK(!r1.used_fallback);

    auto x2 = make_ws(kDna, {{{'A', 0.5}, {'C', 0.5}},
                             {{'A', 1.0}},
                             {{'A', 1.0}},
                             {{'A', 1.0}}});
    const auto r2 = wpm_search(x2, dna_text("CAAAA"), z2);
    CHECK(r2.positions == std::vector<std::size_t>{0, 1});

    CHECK_THROWS_AS(Threshold(1.9), std::invalid_argument);
}

TEST_CASE("wpm_search validates inputs") {
    auto x = make_ws(kDna, {{{'A', 1.0}}, {{'C', 1.0}}});
    CHECK_THROWS_AS(wpm_search(x, PlainText(Symbols{0, 1}, 2), Threshold(2)),
                    AlphabetMismatchError);
    CHECK_THROWS_AS(wpm_search(x, dna_text("A"), Threshold(2)),
                    PatternLongerThanTextError);
    // m == n: a single window is legal
    CHECK(wpm_search(x, dna_text("AC"), Threshold(2)).positions ==
          std::vector<std::size_t>{0});
}

TEST_CASE("verify_wpm_candidate two-stage behaviour") {
    const Threshold t(2.0);

    // grey head with probability 0.6: passes both stages
    auto x1 = make_ws(kDna, {{{'A', 0.6}, {'C', 0.4}}, {{'C', 1.0}}});
    auto q1 = prepare_wpm(x1, t);
    const auto y1 = dna_text("ACC");
    CHECK(verify_wpm_candidate(x1, q1.colouring, q1.matrix, y1, 0, t));

    // letter absent at a black position: stage 1 rejects via the matrix
    auto x2 = make_ws(kDna, {{{'A', 0.5}, {'C', 0.5}}, {{'A', 1.0}}});
    auto q2 = prepare_wpm(x2, t);
    const auto y2 = dna_text("GA");
    SearchDebug dbg;
    CHECK(!verify_wpm_candidate(x2, q2.colouring, q2.matrix, y2, 0, t, &dbg));
    CHECK(dbg.stage1_passes == 0);
    CHECK(dbg.stage2_evals == 0);

    // stage 1 passes on a black position but the product 0.4 < 1/2
    auto x3 = make_ws(kDna, {{{'A', 0.4}, {'C', 0.3}, {'G', 0.3}}, {{'A', 1.0}}});
    auto q3 = prepare_wpm(x3, t);
    const auto y3 = dna_text("AA");
    SearchDebug dbg3;
    CHECK(!verify_wpm_candidate(x3, q3.colouring, q3.matrix, y3, 0, t, &dbg3));
    CHECK(dbg3.stage1_passes == 1);
    CHECK(dbg3.stage2_evals == 1);
}

TEST_CASE("naive_wpm agrees with the oracle and backs the fallback") {
    const Threshold t(2.0);

    // all-black pattern (uniform two-letter positions) forces the fallback
    auto black = make_ws(kDna, {{{'A', 0.5}, {'C', 0.5}},
                                {{'A', 0.5}, {'G', 0.5}},
                                {{'C', 0.5}, {'T', 0.5}}});
    const auto y = dna_text("ACCAGTCAT");
    const auto report = wpm_search(black, y, t);
    CHECK(report.used_fallback);
    CHECK(report.positions == oracle::oracle_wpm(black, y.symbols(), t));
    CHECK(report.positions == naive_wpm(black, y, t));
    CHECK(report.counters.candidates == y.size() - black.size() + 1);

    // m = n - 1: two windows
    auto x = make_ws(kDna, {{{'A', 1.0}}, {{'C', 1.0}}});
    CHECK(naive_wpm(x, dna_text("ACA"), t) == std::vector<std::size_t>{0});
}

TEST_CASE("wpm_search equals the oracle on randomized instances") {
    Rng rng(424242);
    const std::uint32_t sigmas[] = {2, 4, 20};
    const double biases[] = {0.3, 0.7, 0.95};
    int fallbacks = 0;
    for (int it = 0; it < 300; ++it) {
        const std::uint32_t sigma = sigmas[it % 3];
        const double bias = biases[(it / 3) % 3];
        const std::size_t m = 4 + rng.below(61);
        const std::size_t n = 100 + rng.below(1000);
        auto inst = random_wpm_instance(rng, sigma, m, n, bias);

        SearchDebug dbg;
        const auto report = wpm_search(inst.x, inst.y, inst.t, &dbg);
        const auto expected = oracle::oracle_wpm(inst.x, inst.y.symbols(), inst.t);
        CHECK(report.positions == expected);
        if (report.used_fallback) ++fallbacks;

        // filtration completeness: the filter may not miss an occurrence
        for (std::size_t p : expected)
            CHECK(std::binary_search(dbg.candidate_starts.begin(),
                                     dbg.candidate_starts.end(), p));
    }
    CHECK(fallbacks < 30);   // the filtered path dominates
}

TEST_CASE("no grey/white mismatch reaches stage 2") {
    Rng rng(777);
    for (int it = 0; it < 120; ++it) {
        const std::uint32_t sigma = it % 2 ? 2 : 4;
        const std::size_t m = 4 + rng.below(20);
        const std::size_t n = 150 + rng.below(500);
        auto inst = random_wpm_instance(rng, sigma, m, n, 0.6);

        SearchDebug dbg;
        const auto report = wpm_search(inst.x, inst.y, inst.t, &dbg);
        if (report.used_fallback) continue;
        CHECK(dbg.stage1_passes == dbg.stage2_evals);

        // recompute stage-1 verdicts independently
        const Colouring c = colour_positions(inst.x, inst.t);
        std::uint64_t clean = 0;
        for (std::size_t s : dbg.candidate_starts) {
            bool ok = true;
            for (std::size_t j = 0; ok && j < inst.x.size(); ++j) {
                const Symbol ch = inst.y.at(s + j);
                if (c.is_black(j))
                    ok = inst.x.probability(j, ch) > 0.0;
                else
                    ok = ch == c.heavy[j];
            }
            if (ok) ++clean;
        }
        CHECK(clean == dbg.stage1_passes);
    }
}

TEST_CASE("candidate density respects the expected-occurrence bound") {
    Rng rng(51);
    const std::uint32_t sigma = 4;
    const std::size_t n = 100000;
    const Threshold t(2.0);
    for (int it = 0; it < 5; ++it) {
        WeightedString x = gen_weighted(32, sigma, rng.next(), 0.9);
        const Colouring c = colour_positions(x, t);
        if (c.black_count == x.size()) continue;
        if (!weight_ratio_ok(t.z(), x.size(), sigma)) continue;
        PlainText y(gen_solid(n, sigma, rng.next()), sigma);
        const auto report = wpm_search(x, y, t);
        const double bound =
            4.0 * std::pow(static_cast<double>(sigma),
                           -std::floor(32.0 / (static_cast<double>(c.black_count) + 1)));
        CHECK(static_cast<double>(report.counters.candidates) / n <= bound);
    }
}

TEST_CASE("chunked parallel search matches the single-threaded result") {
    Rng rng(9001);
    for (int it = 0; it < 60; ++it) {
        const std::uint32_t sigma = it % 2 ? 4 : 2;
        const std::size_t m = 4 + rng.below(24);
        const std::size_t n = 60 + rng.below(900);
        auto inst = random_wpm_instance(rng, sigma, m, n, 0.7);
        const auto serial = wpm_search(inst.x, inst.y, inst.t);
        const auto parallel = wpm_search(inst.x, inst.y, inst.t, nullptr, 4);
        CHECK(serial.positions == parallel.positions);
        CHECK(serial.counters.candidates == parallel.counters.candidates);
    }
}

TEST_CASE("wpm_candidates exposes the filtration stage") {
    const Threshold t(2.0);
    auto x = make_ws(kDna, {{{'A', 0.5}, {'C', 0.5}},
                            {{'A', 1.0}},
                            {{'A', 1.0}},
                            {{'A', 1.0}}});
    const auto query = prepare_wpm(x, t);
    REQUIRE(!query.fallback());
    CHECK(query.plan->filters().front().offset == 1);

    InspectionCounter ctr;
    const auto y = dna_text("CAAAA");
    CHECK(wpm_candidates(query, y, x.size(), ctr) ==
          std::vector<std::size_t>{0, 1});
    CHECK(ctr.chars_inspected > 0);
}
