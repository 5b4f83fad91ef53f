#include "wsm/wpm.hpp"

#include <algorithm>

#include "chunked.hpp"
#include "wsm/bounds.hpp"
#include "wsm/engines.hpp"
#include "wsm/errors.hpp"
#include "wsm/validity.hpp"

namespace wsm {

namespace {

void check_inputs(const WeightedString& x, const PlainText& y) {
    if (x.size() == 0)
        throw Error("pattern must be non-empty");
    if (x.sigma() != y.sigma())
        throw AlphabetMismatchError("pattern and text use different alphabets");
    if (x.size() > y.size())
        throw PatternLongerThanTextError("pattern longer than text");
}

// Candidate window starts owned by the window-start range [lo, hi):
// filter occurrences found in the covering text slice, mapped back by the
// filter offset, bounds-checked, deduplicated.
std::vector<std::size_t> candidates_in_range(const SkipSearcher& searcher,
                                             std::size_t filter_offset,
                                             const PlainText& y, std::size_t m,
                                             std::size_t lo, std::size_t hi,
                                             InspectionCounter& ctr) {
    const std::size_t n = y.size();
    const std::size_t slice_end = std::min(n, hi - 1 + m);
    TextView view(y, lo, slice_end - lo);

    std::vector<std::size_t> starts;
    for (std::size_t rel : searcher.find_all(view, ctr)) {
        const std::size_t p = lo + rel;
        if (p < filter_offset) continue;
        const std::size_t s = p - filter_offset;
        if (s < lo || s >= hi) continue;   // owned by a neighbouring chunk
        if (s + m > n) continue;
        starts.push_back(s);
    }
    // A single filter cannot hit the same window twice, but the dedup stays
    // for symmetry with the fragment pipeline.
    std::sort(starts.begin(), starts.end());
    starts.erase(std::unique(starts.begin(), starts.end()), starts.end());
    return starts;
}

} // namespace

WpmQuery prepare_wpm(const WeightedString& x, const Threshold& t) {
    WpmQuery query;
    query.colouring = colour_positions(x, t);
    query.matrix = build_black_matrix(x, query.colouring);
    if (query.colouring.black_count < x.size()) {
        const Interval run = longest_clean_run(query.colouring);
        query.plan = SearchPlan::single_factor(
            {run.start, heavy_projection(x, query.colouring, run)});
    }
    return query;
}

bool verify_wpm_candidate(const WeightedString& x, const Colouring& c,
                          const BlackMatrix& a, const PlainText& y,
                          std::size_t i, const Threshold& t,
                          SearchDebug* debug) {
    const std::size_t m = x.size();

    // Stage 1, one linear pass: the window must agree with every heavy
    // letter and show an occurring letter at every black position.
    for (std::size_t j = 0; j < m; ++j) {
        const Symbol ch = y.at(i + j);
        if (c.is_black(j)) {
            if (!a.occurs(c.black_rank[j], ch)) return false;
        } else if (ch != c.heavy[j]) {
            return false;
        }
    }
    if (debug) {
        ++debug->stage1_passes;
        ++debug->stage2_evals;
    }

    // Stage 2: full cumulative probability of the window.
    return window_log_probability(x, y.symbols().subspan(i, m), 0) >=
           t.log_inv_z() - kValidityLogTol;
}

std::vector<std::size_t> naive_wpm(const WeightedString& x, const PlainText& y,
                                   const Threshold& t) {
    check_inputs(x, y);
    const std::size_t m = x.size();
    const std::size_t n = y.size();
    const double cut = t.log_inv_z() - kValidityLogTol;

    std::vector<std::size_t> out;
    for (std::size_t i = 0; i + m <= n; ++i)
        if (window_log_probability(x, y.symbols().subspan(i, m), 0) >= cut)
            out.push_back(i);
    return out;
}

std::vector<std::size_t> wpm_candidates(const WpmQuery& query, const PlainText& y,
                                        std::size_t m, InspectionCounter& ctr) {
    if (query.fallback())
        throw NoCleanRunError("all-black pattern has no filtration stage");
    if (m == 0 || m > y.size())
        return {};
    const PlanFilter& f = query.plan->filters().front();
    SkipSearcher searcher(f.text, y.sigma());
    return candidates_in_range(searcher, f.offset, y, m, 0, y.size() - m + 1, ctr);
}

MatchReport wpm_search(const WeightedString& x, const PlainText& y,
                       const Threshold& t, SearchDebug* debug, unsigned threads) {
    check_inputs(x, y);
    const std::size_t m = x.size();
    const std::size_t n = y.size();

    MatchReport report;
    report.gate_satisfied = weight_ratio_ok(t.z(), m, x.sigma());

    WpmQuery query = prepare_wpm(x, t);
    if (query.fallback()) {
        report.used_fallback = true;
        report.positions = naive_wpm(x, y, t);
        report.counters.candidates = n - m + 1;
        if (debug)
            for (std::size_t i = 0; i + m <= n; ++i)
                debug->candidate_starts.push_back(i);
        return report;
    }

    const PlanFilter& f = query.plan->filters().front();
    SkipSearcher searcher(f.text, x.sigma());

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
            candidates_in_range(searcher, f.offset, y, m, range.start,
                                range.start + range.length, out.ctr);
        out.ctr.candidates = starts.size();
        SearchDebug* dbg = debug ? &out.debug : nullptr;
        for (std::size_t s : starts) {
            if (dbg) dbg->candidate_starts.push_back(s);
            if (verify_wpm_candidate(x, query.colouring, query.matrix, y, s, t, dbg))
                out.positions.push_back(s);
        }
    });

    // Chunk ranges are disjoint and ascending, so concatenation keeps the
    // output sorted and duplicate-free.
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
