#ifndef WSM_WPM_HPP
#define WSM_WPM_HPP

#include <optional>
#include <vector>

#include "wsm/colouring.hpp"
#include "wsm/match_report.hpp"
#include "wsm/search_plan.hpp"
#include "wsm/text.hpp"
#include "wsm/threshold.hpp"
#include "wsm/weighted_string.hpp"

namespace wsm {

// Preprocessing product for a weighted pattern: colouring, occurrence matrix
// for the black positions, and the single-factor plan extracted from the
// longest clean run. plan is empty when every position is black, in which
// case the search falls back to naive verification.
struct WpmQuery {
    Colouring colouring;
    BlackMatrix matrix;
    std::optional<SearchPlan> plan;

    bool fallback() const { return !plan.has_value(); }
};

WpmQuery prepare_wpm(const WeightedString& x, const Threshold& t);

// All positions of y where a valid length-m factor of x occurs, i.e. where
// the window's cumulative occurrence probability is at least 1/z.
MatchReport wpm_search(const WeightedString& x, const PlainText& y,
                       const Threshold& t, SearchDebug* debug = nullptr,
                       unsigned threads = 1);

// Filtration stage only: deduplicated in-bounds candidate window starts.
std::vector<std::size_t> wpm_candidates(const WpmQuery& query, const PlainText& y,
                                        std::size_t m, InspectionCounter& ctr);

// Two-stage candidate check. Stage 1 scans the window once: grey/white
// positions must show the heavy letter, black positions must show a letter
// occurring there (matrix lookup). Stage 2 evaluates the full window
// probability and is reached only if stage 1 passes.
bool verify_wpm_candidate(const WeightedString& x, const Colouring& c,
                          const BlackMatrix& a, const PlainText& y,
                          std::size_t i, const Threshold& t,
                          SearchDebug* debug = nullptr);

// Full verification at every window start; the worst-case fallback path.
std::vector<std::size_t> naive_wpm(const WeightedString& x, const PlainText& y,
                                   const Threshold& t);

} // namespace wsm

#endif
