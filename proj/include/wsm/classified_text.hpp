#ifndef WSM_CLASSIFIED_TEXT_HPP
#define WSM_CLASSIFIED_TEXT_HPP

#include <atomic>
#include <cstdint>
#include <memory>

#include "wsm/threshold.hpp"
#include "wsm/types.hpp"
#include "wsm/weighted_string.hpp"

namespace wsm {

// The implicit classified view of a weighted text: position i reads as the
// heavy letter when one exists (white or grey) and as the sentinel sigma()
// otherwise (black). Nothing is classified up front; the O(sigma) lookup is
// paid on first access and memoized. Concurrent readers may race on the
// first write, which is harmless because the stored value is a pure function
// of the position.
class LazyClassifiedText {
public:
    LazyClassifiedText(const WeightedString& text, const Threshold& t);

    std::size_t size() const { return text_->size(); }
    std::uint32_t sigma() const { return text_->sigma(); }
    Symbol sentinel() const { return static_cast<Symbol>(text_->sigma()); }

    Symbol at(std::size_t i) const;

    const WeightedString& underlying() const { return *text_; }

    // Number of memo misses, for instrumentation and tests.
    std::uint64_t classifications() const {
        return classify_count_.load(std::memory_order_relaxed);
    }

private:
    static constexpr Symbol kUnclassified = 0xFF;

    const WeightedString* text_;
    double heavy_floor_;
    std::unique_ptr<std::atomic<Symbol>[]> memo_;
    mutable std::atomic<std::uint64_t> classify_count_{0};
};

// White: the probability-1 letter; grey: the letter above 1 - 1/z;
// black: the sentinel (text.sigma()).
inline Symbol classify_text_position(const LazyClassifiedText& text, std::size_t i) {
    return text.at(i);
}

} // namespace wsm

#endif
