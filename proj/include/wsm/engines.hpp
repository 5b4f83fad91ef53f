#ifndef WSM_ENGINES_HPP
#define WSM_ENGINES_HPP

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "wsm/text.hpp"
#include "wsm/types.hpp"

namespace wsm {

// Exact single-pattern search with backward-scanning skips. The
// last-occurrence shift table is indexed by the q-gram ending the current
// window rather than a single letter; q grows with the pattern length so the
// expected skip keeps growing past sigma. q = 1 is the classic one-letter
// table. Tables are sized (sigma+1)^q so the sentinel participates like any
// other (never-matching) letter.
class SkipSearcher {
public:
    SkipSearcher(Symbols pattern, std::uint32_t sigma);

    std::size_t pattern_length() const { return pattern_.size(); }
    unsigned gram_length() const { return q_; }

    template <TextSource T>
    void find_into(const T& text, InspectionCounter& ctr,
                   std::vector<std::size_t>& out) const {
        const std::size_t len = pattern_.size();
        const std::size_t n = text.size();
        if (len > n) return;

        std::size_t pos = len - 1;   // index of the window's last letter
        while (pos < n) {
            std::uint32_t gram = 0;
            for (unsigned k = 0; k < q_; ++k) {
                ++ctr.chars_inspected;
                gram = gram * stride_ + text.at(pos - q_ + 1 + k);
            }
            if (is_suffix_[gram]) {
                ++ctr.candidates;
                const std::size_t start = pos - len + 1;
                bool match = true;
                for (std::size_t j = 0; j + q_ < len; ++j) {
                    ++ctr.chars_inspected;
                    if (text.at(start + j) != pattern_[j]) {
                        match = false;
                        break;
                    }
                }
                if (match) out.push_back(start);
            }
            pos += shift_[gram];
        }
    }

    template <TextSource T>
    std::vector<std::size_t> find_all(const T& text, InspectionCounter& ctr) const {
        std::vector<std::size_t> out;
        find_into(text, ctr, out);
        return out;
    }

private:
    Symbols pattern_;
    std::uint32_t sigma_;
    unsigned q_;
    std::uint32_t stride_;                 // sigma + 1
    std::vector<std::uint32_t> shift_;     // always >= 1
    std::vector<std::uint8_t> is_suffix_;  // gram equals the pattern's last q letters
};

// Exact set search over the same scanning scheme (set-wise backward search
// with a q-gram shift table). All patterns are aligned on a window of the
// shortest pattern length; a hash bucket per window-suffix gram lists the
// patterns to verify there.
class MultiSearcher {
public:
    // q is min(3, shortest pattern length), reduced further only if the
    // gram table would not fit in memory.
    MultiSearcher(std::vector<Symbols> patterns, std::uint32_t sigma);

    std::size_t shortest_length() const { return window_; }
    unsigned gram_length() const { return q_; }

    // All exact occurrences of every pattern as (position, pattern id),
    // sorted and duplicate-free.
    template <TextSource T>
    std::vector<std::pair<std::size_t, std::uint32_t>> find_all(
        const T& text, InspectionCounter& ctr) const {
        std::vector<std::pair<std::size_t, std::uint32_t>> out;
        const std::size_t n = text.size();
        if (patterns_.empty() || window_ > n) return out;

        std::size_t pos = window_ - 1;
        while (pos < n) {
            std::uint32_t gram = 0;
            for (unsigned k = 0; k < q_; ++k) {
                ++ctr.chars_inspected;
                gram = gram * stride_ + text.at(pos - q_ + 1 + k);
            }
            for (std::uint32_t id : buckets_[gram]) {
                ++ctr.candidates;
                const Symbols& p = patterns_[id];
                const std::size_t start = pos - window_ + 1;
                if (start + p.size() > n) continue;
                // The window's suffix gram equals p[window_-q_ .. window_),
                // so only the rest needs comparing.
                bool match = true;
                for (std::size_t j = 0; match && j < window_ - q_; ++j) {
                    ++ctr.chars_inspected;
                    match = text.at(start + j) == p[j];
                }
                for (std::size_t j = window_; match && j < p.size(); ++j) {
                    ++ctr.chars_inspected;
                    match = text.at(start + j) == p[j];
                }
                if (match) out.emplace_back(start, id);
            }
            pos += shift_[gram];
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

private:
    std::vector<Symbols> patterns_;
    std::uint32_t sigma_;
    unsigned q_;
    std::size_t window_;                   // shortest pattern length
    std::uint32_t stride_;
    std::vector<std::uint32_t> shift_;
    std::vector<std::vector<std::uint32_t>> buckets_;
};

// One-shot conveniences.
template <TextSource T>
std::vector<std::size_t> find_all(const Symbols& pattern, std::uint32_t sigma,
                                  const T& text, InspectionCounter& ctr) {
    return SkipSearcher(pattern, sigma).find_all(text, ctr);
}

template <TextSource T>
std::vector<std::pair<std::size_t, std::uint32_t>> find_all_multi(
    std::vector<Symbols> patterns, std::uint32_t sigma, const T& text,
    InspectionCounter& ctr) {
    return MultiSearcher(std::move(patterns), sigma).find_all(text, ctr);
}

} // namespace wsm

#endif
