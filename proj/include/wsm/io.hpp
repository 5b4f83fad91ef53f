#ifndef WSM_IO_HPP
#define WSM_IO_HPP

#include <string>
#include <string_view>

#include "wsm/alphabet.hpp"
#include "wsm/errors.hpp"
#include "wsm/types.hpp"
#include "wsm/weighted_string.hpp"

namespace wsm {

// Sequence file formats. Both start with a header line
//
//   #alphabet ACGT
//
// A weighted file then holds one token per position, whitespace-separated:
// a bare letter for solid positions, or [A:0.6,C:0.4] for uncertain ones.
// A plain file holds the letters themselves; whitespace is ignored.
//
// Parsers throw ParseError with a kind and 1-based line/column. Position
// probabilities must sum to 1 within 1e-6 and are renormalized on load.

WeightedString parse_weighted(std::string_view text);
std::string serialize_weighted(const WeightedString& ws);

struct PlainSequence {
    Alphabet alphabet;
    Symbols symbols;
};

PlainSequence parse_plain(std::string_view text);
std::string serialize_plain(const Alphabet& alphabet,
                            std::span<const Symbol> symbols);

} // namespace wsm

#endif
