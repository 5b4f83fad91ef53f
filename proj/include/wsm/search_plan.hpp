#ifndef WSM_SEARCH_PLAN_HPP
#define WSM_SEARCH_PLAN_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "wsm/types.hpp"

namespace wsm {

// Split [0, m) into ell + 1 contiguous fragments whose lengths differ by at
// most one; the first (m mod (ell+1)) fragments take the longer length.
// Throws FragmentTooShortError when ell >= m.
std::vector<Interval> partition_fragments(std::size_t m, std::int64_t ell);

// Filter string together with its offset in the pattern.
struct PlanFilter {
    std::size_t offset;
    Symbols text;
};

// What the filtration stage searches for: either the single projected factor
// (weighted pattern) or the fragment list (plain pattern over weighted text).
class SearchPlan {
public:
    enum class Mode { SingleFactor, Fragments };

    static SearchPlan single_factor(PlanFilter filter);
    // Validates that the filters tile [0, m) contiguously with lengths
    // differing by at most one.
    static SearchPlan fragments(std::vector<PlanFilter> filters, std::size_t m);

    Mode mode() const { return mode_; }
    std::span<const PlanFilter> filters() const { return filters_; }

private:
    SearchPlan(Mode mode, std::vector<PlanFilter> filters)
        : mode_(mode), filters_(std::move(filters)) {}

    Mode mode_;
    std::vector<PlanFilter> filters_;
};

} // namespace wsm

#endif
