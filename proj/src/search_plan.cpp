#include "wsm/search_plan.hpp"

#include "wsm/errors.hpp"

namespace wsm {

std::vector<Interval> partition_fragments(std::size_t m, std::int64_t ell) {
    if (ell < 0)
        throw Error("fragment count must be positive");
    const std::size_t parts = static_cast<std::size_t>(ell) + 1;
    if (m / parts == 0)
        throw FragmentTooShortError("cannot split " + std::to_string(m) +
                                    " positions into " + std::to_string(parts) +
                                    " non-empty fragments");

    const std::size_t base = m / parts;
    const std::size_t longer = m % parts;

    std::vector<Interval> out;
    out.reserve(parts);
    std::size_t at = 0;
    for (std::size_t k = 0; k < parts; ++k) {
        const std::size_t len = base + (k < longer ? 1 : 0);
        out.push_back({at, len});
        at += len;
    }
    return out;
}

SearchPlan SearchPlan::single_factor(PlanFilter filter) {
    if (filter.text.empty())
        throw Error("single-factor plan needs a non-empty filter");
    std::vector<PlanFilter> fs;
    fs.push_back(std::move(filter));
    return SearchPlan(Mode::SingleFactor, std::move(fs));
}

SearchPlan SearchPlan::fragments(std::vector<PlanFilter> filters, std::size_t m) {
    if (filters.empty())
        throw Error("fragment plan needs at least one filter");

    std::size_t shortest = filters.front().text.size();
    std::size_t longest = shortest;
    std::size_t at = 0;
    for (const auto& f : filters) {
        if (f.offset != at)
            throw Error("fragments must tile the pattern contiguously");
        if (f.text.empty())
            throw FragmentTooShortError("empty fragment in plan");
        shortest = std::min(shortest, f.text.size());
        longest = std::max(longest, f.text.size());
        at += f.text.size();
    }
    if (at != m)
        throw Error("fragments do not cover the pattern");
    if (longest - shortest > 1)
        throw Error("fragment lengths may differ by at most one");

    return SearchPlan(Mode::Fragments, std::move(filters));
}

} // namespace wsm
