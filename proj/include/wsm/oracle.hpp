#ifndef WSM_ORACLE_HPP
#define WSM_ORACLE_HPP

#include <span>
#include <vector>

#include "wsm/threshold.hpp"
#include "wsm/types.hpp"
#include "wsm/weighted_string.hpp"

namespace wsm::oracle {

// Brute-force reference implementations: every window is scored by direct
// evaluation of the occurrence-probability product, in log2 space with the
// shared validity tolerance. Nothing here touches the colouring, engine or
// pipeline code paths, so these stay meaningful as test oracles.

std::vector<std::size_t> oracle_wpm(const WeightedString& x,
                                    std::span<const Symbol> y,
                                    const Threshold& t);

std::vector<std::size_t> oracle_wtm(std::span<const Symbol> x,
                                    const WeightedString& y,
                                    const Threshold& t);

} // namespace wsm::oracle

#endif
