#ifndef WSM_TEXT_HPP
#define WSM_TEXT_HPP

#include <concepts>
#include <cstdint>
#include <span>

#include "wsm/errors.hpp"
#include "wsm/types.hpp"

namespace wsm {

// Search instrumentation. chars_inspected counts accessor calls made by the
// filtration scan; candidates counts filter hits passed to verification.
// Both only ever grow during a search.
struct InspectionCounter {
    std::uint64_t chars_inspected = 0;
    std::uint64_t candidates = 0;
};

// Anything the engines can scan: a length and a per-position accessor that
// yields a letter index, or sigma as the sentinel for "no single letter
// here". The accessor must be deterministic (memoization aside).
template <typename T>
concept TextSource = requires(const T& t, std::size_t i) {
    { t.size() } -> std::convertible_to<std::size_t>;
    { t.at(i) } -> std::convertible_to<Symbol>;
};

// Plain text over dense letter indices. Entries equal to sigma act as the
// sentinel and mismatch every pattern letter.
class PlainText {
public:
    PlainText(Symbols symbols, std::uint32_t sigma)
        : symbols_(std::move(symbols)), sigma_(sigma) {
        for (Symbol s : symbols_)
            if (s > sigma_)
                throw Error("text symbol out of range");
    }

    std::size_t size() const { return symbols_.size(); }
    Symbol at(std::size_t i) const { return symbols_[i]; }
    std::uint32_t sigma() const { return sigma_; }
    std::span<const Symbol> symbols() const { return symbols_; }

private:
    Symbols symbols_;
    std::uint32_t sigma_;
};

// Window [offset, offset + length) of another source, for chunked searches.
template <TextSource T>
class TextView {
public:
    TextView(const T& base, std::size_t offset, std::size_t length)
        : base_(&base), offset_(offset), length_(length) {}

    std::size_t size() const { return length_; }
    Symbol at(std::size_t i) const { return base_->at(offset_ + i); }
    std::size_t offset() const { return offset_; }

private:
    const T* base_;
    std::size_t offset_;
    std::size_t length_;
};

} // namespace wsm

#endif
