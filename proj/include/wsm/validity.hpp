#ifndef WSM_VALIDITY_HPP
#define WSM_VALIDITY_HPP

#include <span>

#include "wsm/threshold.hpp"
#include "wsm/types.hpp"
#include "wsm/weighted_string.hpp"

namespace wsm {

// log2 of the cumulative occurrence probability of u at position i of w:
// sum of log2 pi_{i+j}(u[j]). Returns -infinity when some letter does not
// occur, so non-occurrence needs no separate signal. Solid positions
// contribute exactly 0.
double window_log_probability(const WeightedString& w, std::span<const Symbol> u,
                              std::size_t i);

// Validity of factor u at position i: cumulative probability >= 1/z,
// compared on the log2 scale with absolute tolerance kValidityLogTol.
bool is_valid_window(const WeightedString& w, std::span<const Symbol> u,
                     std::size_t i, const Threshold& t);

} // namespace wsm

#endif
