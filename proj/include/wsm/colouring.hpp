#ifndef WSM_COLOURING_HPP
#define WSM_COLOURING_HPP

#include <cstdint>
#include <limits>
#include <vector>

#include "wsm/threshold.hpp"
#include "wsm/types.hpp"
#include "wsm/weighted_string.hpp"

namespace wsm {

// Per-position classification against the heavy-letter floor 1 - 1/z:
//   White - one letter has probability exactly 1
//   Grey  - one letter has probability in (1 - 1/z, 1)
//   Black - no letter exceeds 1 - 1/z
// For z >= 2 at most one letter can exceed the floor, so the three cases
// partition the positions and the heavy letter at grey/white is unique.
enum class Colour : std::uint8_t { Black, Grey, White };

constexpr Symbol kNoHeavy = 0xFF;
constexpr std::uint32_t kNotBlack = std::numeric_limits<std::uint32_t>::max();

struct Colouring {
    std::vector<Colour> colours;
    std::vector<Symbol> heavy;            // kNoHeavy at black positions
    std::vector<std::uint32_t> black_rank; // rank among black positions, kNotBlack otherwise
    std::size_t black_count = 0;

    std::size_t size() const { return colours.size(); }
    bool is_black(std::size_t i) const { return colours[i] == Colour::Black; }
};

Colouring colour_positions(const WeightedString& x, const Threshold& t);

// Occurrence table for the black positions: occurs(r, a) is true iff letter
// a has positive probability at the r-th black position (left to right).
class BlackMatrix {
public:
    BlackMatrix() = default;
    BlackMatrix(std::size_t rows, std::uint32_t sigma);

    std::size_t rows() const { return rows_; }
    std::uint32_t sigma() const { return sigma_; }

    bool occurs(std::size_t row, Symbol letter) const {
        return letter < sigma_ && cells_[row * sigma_ + letter] != 0;
    }
    void set(std::size_t row, Symbol letter) { cells_[row * sigma_ + letter] = 1; }

private:
    std::size_t rows_ = 0;
    std::uint32_t sigma_ = 0;
    std::vector<std::uint8_t> cells_;
};

BlackMatrix build_black_matrix(const WeightedString& x, const Colouring& c);

// Leftmost maximal run free of black positions. Throws NoCleanRunError when
// every position is black.
Interval longest_clean_run(const Colouring& c);

// Heavy letters over a black-free range; throws BlackInRangeError otherwise.
Symbols heavy_projection(const WeightedString& x, const Colouring& c,
                         Interval range);

} // namespace wsm

#endif
