#include "wsm/classified_text.hpp"

namespace wsm {

LazyClassifiedText::LazyClassifiedText(const WeightedString& text,
                                       const Threshold& t)
    : text_(&text), heavy_floor_(t.heavy_floor()),
      memo_(new std::atomic<Symbol>[text.size()]) {
    for (std::size_t i = 0; i < text.size(); ++i)
        memo_[i].store(kUnclassified, std::memory_order_relaxed);
}

Symbol LazyClassifiedText::at(std::size_t i) const {
    Symbol v = memo_[i].load(std::memory_order_relaxed);
    if (v != kUnclassified) return v;

    v = sentinel();
    for (const auto& e : text_->position(i)) {
        if (e.prob > heavy_floor_) {
            v = e.letter;
            break;
        }
    }
    memo_[i].store(v, std::memory_order_relaxed);
    classify_count_.fetch_add(1, std::memory_order_relaxed);
    return v;
}

} // namespace wsm
