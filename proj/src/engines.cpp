#include "wsm/engines.hpp"

#include <cmath>

#include "wsm/errors.hpp"

namespace wsm {

namespace {

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
    std::uint64_t v = 1;
    while (exp--) v *= base;
    return v;
}

constexpr std::uint64_t kMaxTableSize = 1u << 20;

// Shortest q with (sigma+1)^q >= 4 * len, so that most text grams miss the
// table and the skip stays near len - q + 1.
unsigned pick_gram_length(std::size_t len, std::uint32_t sigma) {
    unsigned q = 1;
    while (q < 8 && q < len && ipow(sigma + 1, q) < 4 * static_cast<std::uint64_t>(len))
        ++q;
    while (q > 1 && ipow(sigma + 1, q) > kMaxTableSize)
        --q;
    return q;
}

} // namespace

SkipSearcher::SkipSearcher(Symbols pattern, std::uint32_t sigma)
    : pattern_(std::move(pattern)), sigma_(sigma) {
    if (pattern_.empty())
        throw Error("search pattern must be non-empty");
    for (Symbol s : pattern_)
        if (s >= sigma_)
            throw Error("pattern symbol out of range");

    const std::size_t len = pattern_.size();
    q_ = pick_gram_length(len, sigma_);
    stride_ = sigma_ + 1;

    const std::size_t table = static_cast<std::size_t>(ipow(stride_, q_));
    shift_.assign(table, static_cast<std::uint32_t>(len - q_ + 1));
    is_suffix_.assign(table, 0);

    // Gram ending at pattern position j shifts the window by len-1-j; the
    // gram ending at len-1 marks a candidate instead.
    for (std::size_t j = q_ - 1; j < len; ++j) {
        std::uint32_t gram = 0;
        for (unsigned k = 0; k < q_; ++k)
            gram = gram * stride_ + pattern_[j - q_ + 1 + k];
        if (j == len - 1)
            is_suffix_[gram] = 1;
        else
            shift_[gram] = std::min(shift_[gram],
                                    static_cast<std::uint32_t>(len - 1 - j));
    }
}

MultiSearcher::MultiSearcher(std::vector<Symbols> patterns, std::uint32_t sigma)
    : patterns_(std::move(patterns)), sigma_(sigma) {
    if (patterns_.empty())
        throw Error("pattern set must be non-empty");

    window_ = patterns_.front().size();
    for (const auto& p : patterns_) {
        if (p.empty())
            throw Error("search pattern must be non-empty");
        for (Symbol s : p)
            if (s >= sigma_)
                throw Error("pattern symbol out of range");
        window_ = std::min(window_, p.size());
    }

    q_ = static_cast<unsigned>(std::min<std::size_t>(3, window_));
    stride_ = sigma_ + 1;
    while (q_ > 1 && ipow(stride_, q_) > kMaxTableSize)
        --q_;

    const std::size_t table = static_cast<std::size_t>(ipow(stride_, q_));
    shift_.assign(table, static_cast<std::uint32_t>(window_ - q_ + 1));
    buckets_.assign(table, {});

    for (std::uint32_t id = 0; id < patterns_.size(); ++id) {
        const Symbols& p = patterns_[id];
        for (std::size_t j = q_ - 1; j < window_; ++j) {
            std::uint32_t gram = 0;
            for (unsigned k = 0; k < q_; ++k)
                gram = gram * stride_ + p[j - q_ + 1 + k];
            if (j == window_ - 1)
                buckets_[gram].push_back(id);
            else
                shift_[gram] = std::min(shift_[gram],
                                        static_cast<std::uint32_t>(window_ - 1 - j));
        }
    }
}

} // namespace wsm
