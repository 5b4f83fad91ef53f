#ifndef WSM_WEIGHTED_STRING_HPP
#define WSM_WEIGHTED_STRING_HPP

#include <span>
#include <vector>

#include "wsm/alphabet.hpp"
#include "wsm/types.hpp"

namespace wsm {

struct WeightedEntry {
    Symbol letter;
    double prob;

    friend bool operator==(const WeightedEntry&, const WeightedEntry&) = default;
};

// A string in which a set of letters may occur at each position with
// respective occurrence probabilities. Entries are stored flattened with
// per-position offsets; positions are immutable once built.
//
// Construction checks, per position: letters valid and distinct, every
// probability positive, probabilities summing to 1 within 1e-6. The stored
// probabilities are then renormalized by the actual sum, so a solid
// position always carries probability exactly 1.
class WeightedString {
public:
    static constexpr double kSumTolerance = 1e-6;

    class Builder {
    public:
        explicit Builder(Alphabet alphabet, std::size_t reserve_positions = 0);

        // Entries for one position; throws wsm::Error on invariant violations.
        Builder& add_position(std::span<const WeightedEntry> entries);
        Builder& add_solid(Symbol letter);

        WeightedString build();   // throws if no position was added

    private:
        Alphabet alphabet_;
        std::vector<std::uint32_t> offsets_;
        std::vector<WeightedEntry> entries_;
    };

    std::size_t size() const { return offsets_.size() - 1; }
    std::uint32_t sigma() const { return alphabet_.size(); }
    const Alphabet& alphabet() const { return alphabet_; }

    std::span<const WeightedEntry> position(std::size_t i) const {
        return {entries_.data() + offsets_[i],
                entries_.data() + offsets_[i + 1]};
    }

    // Occurrence probability of `letter` at position i; 0 if it does not occur.
    double probability(std::size_t i, Symbol letter) const {
        for (const auto& e : position(i))
            if (e.letter == letter) return e.prob;
        return 0.0;
    }

    bool is_solid(std::size_t i) const {
        return offsets_[i + 1] - offsets_[i] == 1;
    }

private:
    WeightedString(Alphabet alphabet, std::vector<std::uint32_t> offsets,
                   std::vector<WeightedEntry> entries)
        : alphabet_(std::move(alphabet)), offsets_(std::move(offsets)),
          entries_(std::move(entries)) {}

    Alphabet alphabet_;
    std::vector<std::uint32_t> offsets_;   // size() + 1 entries
    std::vector<WeightedEntry> entries_;
};

} // namespace wsm

#endif
