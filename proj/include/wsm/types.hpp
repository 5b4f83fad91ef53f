#ifndef WSM_TYPES_HPP
#define WSM_TYPES_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace wsm {

// Dense letter index into an Alphabet. The value sigma (one past the last
// letter) is reserved for the sentinel that classified texts use at
// uncertain positions; it never equals a real letter.
using Symbol = std::uint8_t;
using Symbols = std::vector<Symbol>;

// Half-open [start, start + length) range of positions.
struct Interval {
    std::size_t start = 0;
    std::size_t length = 0;

    friend bool operator==(const Interval&, const Interval&) = default;
};

} // namespace wsm

#endif
