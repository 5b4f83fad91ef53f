#ifndef WSM_WTM_HPP
#define WSM_WTM_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "wsm/classified_text.hpp"
#include "wsm/match_report.hpp"
#include "wsm/search_plan.hpp"
#include "wsm/threshold.hpp"
#include "wsm/types.hpp"
#include "wsm/weighted_string.hpp"

namespace wsm {

// Preprocessing product for a plain pattern against a weighted text: the
// black-position bound and the fragment plan. plan is empty when
// ell >= m, in which case the search falls back to naive verification.
struct WtmQuery {
    std::int64_t ell = 0;
    std::optional<SearchPlan> plan;

    bool fallback() const { return !plan.has_value(); }
};

WtmQuery prepare_wtm(const Symbols& x, const Threshold& t);

// All positions of y where a valid length-m factor equal to x occurs.
// Fragments of x are searched in the implicit classified view of y; nothing
// of y is classified beyond the positions the scan touches.
MatchReport wtm_search(const Symbols& x, const WeightedString& y,
                       const Threshold& t, SearchDebug* debug = nullptr,
                       unsigned threads = 1);

// Filtration stage only: deduplicated in-bounds candidate window starts.
std::vector<std::size_t> wtm_candidates(const WtmQuery& query,
                                        const LazyClassifiedText& text,
                                        InspectionCounter& ctr);

// One linear scan: equality with x and validity in y both reduce to the
// cumulative probability of x's letters over the window.
bool verify_wtm_candidate(const Symbols& x, const WeightedString& y,
                          std::size_t i, const Threshold& t);

// Full verification at every window start; the worst-case fallback path.
std::vector<std::size_t> naive_wtm(const Symbols& x, const WeightedString& y,
                                   const Threshold& t);

} // namespace wsm

#endif
