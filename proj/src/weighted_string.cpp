#include "wsm/weighted_string.hpp"

#include <cmath>
#include <cstring>

#include "wsm/errors.hpp"

namespace wsm {

WeightedString::Builder::Builder(Alphabet alphabet, std::size_t reserve_positions)
    : alphabet_(std::move(alphabet)) {
    offsets_.reserve(reserve_positions + 1);
    offsets_.push_back(0);
    entries_.reserve(reserve_positions);
}

WeightedString::Builder& WeightedString::Builder::add_position(
    std::span<const WeightedEntry> entries) {
    if (entries.empty())
        throw Error("weighted position needs at least one letter");

    bool seen[256] = {};
    double sum = 0.0;
    for (const auto& e : entries) {
        if (e.letter >= alphabet_.size())
            throw Error("letter index out of range for alphabet");
        if (seen[e.letter])
            throw Error(std::string("letter '") + alphabet_.letter(e.letter) +
                        "' repeated within a position");
        seen[e.letter] = true;
        if (!(e.prob > 0.0) || !std::isfinite(e.prob))
            throw Error("occurrence probability must be positive");
        sum += e.prob;
    }
    if (std::abs(sum - 1.0) > kSumTolerance)
        throw Error("position probabilities sum to " + std::to_string(sum) +
                    ", outside tolerance");

    for (const auto& e : entries)
        entries_.push_back({e.letter, e.prob / sum});
    offsets_.push_back(static_cast<std::uint32_t>(entries_.size()));
    return *this;
}

WeightedString::Builder& WeightedString::Builder::add_solid(Symbol letter) {
    WeightedEntry e{letter, 1.0};
    return add_position({&e, 1});
}

WeightedString WeightedString::Builder::build() {
    if (offsets_.size() < 2)
        throw Error("weighted string must be non-empty");
    return WeightedString(std::move(alphabet_), std::move(offsets_),
                          std::move(entries_));
}

} // namespace wsm
