#include "wsm/wtm.hpp"

#include <algorithm>

#include "chunked.hpp"
#include "wsm/bounds.hpp"
#include "wsm/engines.hpp"
#include "wsm/errors.hpp"
#include "wsm/validity.hpp"

namespace wsm {

namespace {

void check_inputs(const Symbols& x, const WeightedString& y) {
    if (x.empty())
        throw Error("pattern must be non-empty");
    for (Symbol s : x)
        if (s >= y.sigma())
            throw AlphabetMismatchError("pattern letter outside text alphabet");
    if (x.size() > y.size())
        throw PatternLongerThanTextError("pattern longer than text");
}

std::vector<std::size_t> candidates_in_range(const MultiSearcher& searcher,
                                             const SearchPlan& plan,
                                             const LazyClassifiedText& text,
                                             std::size_t m, std::size_t lo,
                                             std::size_t hi,
                                             InspectionCounter& ctr) {
    const std::size_t n = text.size();
    const std::size_t slice_end = std::min(n, hi - 1 + m);
    TextView view(text, lo, slice_end - lo);

    std::vector<std::size_t> starts;
    for (const auto& [rel, id] : searcher.find_all(view, ctr)) {
        const std::size_t p = lo + rel;
        const std::size_t offset = plan.filters()[id].offset;
        if (p < offset) continue;
        const std::size_t s = p - offset;
        if (s < lo || s >= hi) continue;   // owned by a neighbouring chunk
        if (s + m > n) continue;
        starts.push_back(s);
    }
    // Several fragments can hit the same window; verify each start once.
    std::sort(starts.begin(), starts.end());
    starts.erase(std::unique(starts.begin(), starts.end()), starts.end());
    return starts;
}

} // namespace

WtmQuery prepare_wtm(const Symbols& x, const Threshold& t) {
    WtmQuery query;
    query.ell = black_bound(t);
    if (query.ell < static_cast<std::int64_t>(x.size())) {
        std::vector<PlanFilter> filters;
        for (const Interval& frag : partition_fragments(x.size(), query.ell))
            filters.push_back({frag.start,
                               Symbols(x.begin() + frag.start,
                                       x.begin() + frag.start + frag.length)});
        query.plan = SearchPlan::fragments(std::move(filters), x.size());
    }
    return query;
}

bool verify_wtm_candidate(const Symbols& x, const WeightedString& y,
                          std::size_t i, const Threshold& t) {
    return window_log_probability(y, x, i) >= t.log_inv_z() - kValidityLogTol;
}

std::vector<std::size_t> naive_wtm(const Symbols& x, const WeightedString& y,
                                   const Threshold& t) {
    check_inputs(x, y);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i + x.size() <= y.size(); ++i)
        if (verify_wtm_candidate(x, y, i, t))
            out.push_back(i);
    return out;
}

std::vector<std::size_t> wtm_candidates(const WtmQuery& query,
                                        const LazyClassifiedText& text,
                                        InspectionCounter& ctr) {
    if (query.fallback())
        throw Error("fallback query has no filtration stage");
    const std::size_t m = query.plan->filters().back().offset +
                          query.plan->filters().back().text.size();
    if (m > text.size())
        return {};

    std::vector<Symbols> patterns;
    for (const auto& f : query.plan->filters()) patterns.push_back(f.text);
    MultiSearcher searcher(std::move(patterns), text.sigma());
    return candidates_in_range(searcher, *query.plan, text, m, 0,
                               text.size() - m + 1, ctr);
}

MatchReport wtm_search(const Symbols& x, const WeightedString& y,
                       const Threshold& t, SearchDebug* debug, unsigned threads) {
    check_inputs(x, y);
    const std::size_t m = x.size();
    const std::size_t n = y.size();

    MatchReport report;
    report.gate_satisfied = weight_ratio_ok(t.z(), m, y.sigma());

    WtmQuery query = prepare_wtm(x, t);
    if (query.fallback()) {
        report.used_fallback = true;
        report.positions = naive_wtm(x, y, t);
        report.counters.candidates = n - m + 1;
        if (debug)
            for (std::size_t i = 0; i + m <= n; ++i)
                debug->candidate_starts.push_back(i);
        return report;
    }

    std::vector<Symbols> patterns;
    for (const auto& f : query.plan->filters()) patterns.push_back(f.text);
    MultiSearcher searcher(std::move(patterns), y.sigma());
    LazyClassifiedText classified(y, t);

    struct ChunkOut {
        std::vector<std::size_t> positions;
        InspectionCounter ctr;
        SearchDebug debug;
    };
    const auto chunks = detail::split_work(n - m + 1, threads);
    std::vector<ChunkOut> outs(chunks.size());

    detail::parallel_chunks(chunks, [&](std::size_t k, Interval range) {
        ChunkOut& out = outs[k];
        const auto starts =
            candidates_in_range(searcher, *query.plan, classified, m,
                                range.start, range.start + range.length, out.ctr);
        out.ctr.candidates = starts.size();
        for (std::size_t s : starts) {
            if (debug) {
                out.debug.candidate_starts.push_back(s);
                ++out.debug.stage2_evals;
            }
            if (verify_wtm_candidate(x, y, s, t))
                out.positions.push_back(s);
        }
    });

    for (auto& out : outs) {
        report.positions.insert(report.positions.end(), out.positions.begin(),
                                out.positions.end());
        report.counters.chars_inspected += out.ctr.chars_inspected;
        report.counters.candidates += out.ctr.candidates;
        if (debug) {
            debug->candidate_starts.insert(debug->candidate_starts.end(),
                                           out.debug.candidate_starts.begin(),
                                           out.debug.candidate_starts.end());
            debug->stage1_passes += out.debug.stage1_passes;
            debug->stage2_evals += out.debug.stage2_evals;
        }
    }
    return report;
}

} // namespace wsm
