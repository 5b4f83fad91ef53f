#ifndef WSM_TESTS_HELPERS_HPP
#define WSM_TESTS_HELPERS_HPP

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "wsm/alphabet.hpp"
#include "wsm/genmodel.hpp"
#include "wsm/text.hpp"
#include "wsm/threshold.hpp"
#include "wsm/types.hpp"
#include "wsm/weighted_string.hpp"

namespace wsm::testutil {

using PositionSpec = std::vector<std::pair<char, double>>;

// Weighted string from character/probability pairs, e.g.
//   make_ws(a, {{{'A', 1.0}}, {{'C', 0.6}, {'G', 0.4}}}).
inline WeightedString make_ws(const Alphabet& alphabet,
                              const std::vector<PositionSpec>& positions) {
    WeightedString::Builder builder(alphabet, positions.size());
    std::vector<WeightedEntry> entries;
    for (const auto& spec : positions) {
        entries.clear();
        for (const auto& [c, p] : spec)
            entries.push_back({alphabet.index_of(c), p});
        builder.add_position(entries);
    }
    return builder.build();
}

// Reference single-pattern scanner: plain double loop, sentinel letters
// mismatch by value.
inline std::vector<std::size_t> naive_find(const Symbols& pattern,
                                           const Symbols& text) {
    std::vector<std::size_t> out;
    if (pattern.empty() || pattern.size() > text.size()) return out;
    for (std::size_t i = 0; i + pattern.size() <= text.size(); ++i) {
        bool match = true;
        for (std::size_t j = 0; match && j < pattern.size(); ++j)
            match = text[i + j] == pattern[j];
        if (match) out.push_back(i);
    }
    return out;
}

inline std::vector<std::pair<std::size_t, std::uint32_t>> naive_find_multi(
    const std::vector<Symbols>& patterns, const Symbols& text) {
    std::vector<std::pair<std::size_t, std::uint32_t>> out;
    for (std::uint32_t id = 0; id < patterns.size(); ++id)
        for (std::size_t p : naive_find(patterns[id], text))
            out.emplace_back(p, id);
    std::sort(out.begin(), out.end());
    return out;
}

// Raw per-position entry lists of a weighted string, for rebuild-with-edits.
inline std::vector<std::vector<WeightedEntry>> entries_of(const WeightedString& w) {
    std::vector<std::vector<WeightedEntry>> out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        out[i].assign(w.position(i).begin(), w.position(i).end());
    return out;
}

inline WeightedString rebuild(const Alphabet& alphabet,
                              const std::vector<std::vector<WeightedEntry>>& positions) {
    WeightedString::Builder builder(alphabet, positions.size());
    for (const auto& pos : positions) builder.add_position(pos);
    return builder.build();
}

// Most probable letter at a position (first one on ties).
inline Symbol likely_letter(const WeightedString& w, std::size_t i) {
    Symbol best = w.position(i).front().letter;
    double best_p = w.position(i).front().prob;
    for (const auto& e : w.position(i))
        if (e.prob > best_p) {
            best_p = e.prob;
            best = e.letter;
        }
    return best;
}

struct WpmInstance {
    WeightedString x;
    PlainText y;
    Threshold t;
};

// Random weighted-pattern instance. Besides uniform text, a handful of
// windows get planted with letters drawn to favour the pattern's likely
// letters, so occurrence sets are non-trivial and straddle the threshold.
inline WpmInstance random_wpm_instance(Rng& rng, std::uint32_t sigma,
                                       std::size_t m, std::size_t n,
                                       double solid_bias) {
    WeightedString x = gen_weighted(m, sigma, rng.next(), solid_bias);
    Symbols y = gen_solid(n, sigma, rng.next());
    const std::size_t plants = 1 + n / 500;
    for (std::size_t k = 0; k < plants; ++k) {
        const std::size_t at = rng.below(n - m + 1);
        for (std::size_t j = 0; j < m; ++j) {
            if (rng.unit() < 0.8) {
                y[at + j] = likely_letter(x, j);
            } else {
                const auto pos = x.position(j);
                y[at + j] = pos[rng.below(pos.size())].letter;
            }
        }
    }
    const double z = 2.0 + 14.0 * rng.unit();
    return {std::move(x), PlainText(std::move(y), sigma), Threshold(z)};
}

struct WtmInstance {
    Symbols x;
    WeightedString y;
    Threshold t;
};

// Random weighted-text instance with pattern copies planted into the text:
// planted positions become solid pattern letters or two-letter sets whose
// pattern-letter probability varies, so window products land on both sides
// of 1/z.
inline WtmInstance random_wtm_instance(Rng& rng, std::uint32_t sigma,
                                       std::size_t m, std::size_t n,
                                       double solid_bias) {
    Symbols x = gen_solid(m, sigma, rng.next());
    auto positions = entries_of(gen_weighted(n, sigma, rng.next(), solid_bias));
    const Alphabet alphabet = Alphabet::generic(sigma);

    const std::size_t plants = 1 + n / 500;
    for (std::size_t k = 0; k < plants; ++k) {
        const std::size_t at = rng.below(n - m + 1);
        for (std::size_t j = 0; j < m; ++j) {
            if (rng.unit() >= 0.85) continue;   // leave some positions as drawn
            if (rng.unit() < 0.5) {
                positions[at + j] = {{x[j], 1.0}};
            } else {
                const double p = 0.3 + 0.7 * rng.unit();
                const Symbol other = static_cast<Symbol>(
                    (x[j] + 1 + rng.below(sigma - 1)) % sigma);
                positions[at + j] = {{x[j], p}, {other, 1.0 - p}};
            }
        }
    }
    const double z = 2.0 + 14.0 * rng.unit();
    return {std::move(x), rebuild(alphabet, positions), Threshold(z)};
}

// Minimum count of grey/white positions the corollaries require for the
// sublinear regime, expressed through its complement: the cap on black
// positions in a length-m factor.
inline std::size_t corollary_black_cap(std::size_t m, std::uint32_t sigma) {
    const double log_m = std::log2(static_cast<double>(m));
    const double log_sigma = std::log2(static_cast<double>(sigma));
    if (static_cast<double>(sigma) > static_cast<double>(m) * log_sigma)
        return m - 1;
    return static_cast<std::size_t>(
        std::floor(static_cast<double>(m) * log_sigma /
                   (log_m + std::log2(log_sigma))));
}

} // namespace wsm::testutil

#endif
