#ifndef WSM_MATCH_REPORT_HPP
#define WSM_MATCH_REPORT_HPP

#include <cstdint>
#include <vector>

#include "wsm/text.hpp"
#include "wsm/types.hpp"

namespace wsm {

// Outcome of a pipeline search. positions is strictly increasing and every
// entry lies in [0, n - m]. counters.chars_inspected covers the filtration
// scan; counters.candidates is the number of deduplicated windows that went
// to verification (n - m + 1 on the naive fallback path).
struct MatchReport {
    std::vector<std::size_t> positions;
    InspectionCounter counters;
    bool used_fallback = false;
    bool gate_satisfied = false;
};

// Optional test/diagnostic tap into a pipeline run. candidate_starts are the
// deduplicated in-bounds window starts handed to verification.
struct SearchDebug {
    std::vector<std::size_t> candidate_starts;
    std::uint64_t stage1_passes = 0;
    std::uint64_t stage2_evals = 0;
};

} // namespace wsm

#endif
