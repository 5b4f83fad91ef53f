#ifndef WSM_ALPHABET_HPP
#define WSM_ALPHABET_HPP

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "wsm/types.hpp"

namespace wsm {

// Ordered set of distinct letters mapped to dense indices 0..sigma-1.
// Size is capped at 254 so that index sigma (the sentinel) and 0xFF (the
// "not yet classified" marker in lazy texts) stay representable in a byte.
class Alphabet {
public:
    static constexpr std::uint32_t kMaxSize = 254;

    explicit Alphabet(std::string_view letters);

    // First sigma letters of a fixed 62-letter universe (A-Z, a-z, 0-9);
    // used by the generators so that sigma alone pins the alphabet.
    static Alphabet generic(std::uint32_t sigma);

    std::uint32_t size() const { return static_cast<std::uint32_t>(letters_.size()); }
    char letter(Symbol index) const { return letters_[index]; }
    const std::string& letters() const { return letters_; }

    bool contains(char c) const { return index_[static_cast<unsigned char>(c)] >= 0; }
    Symbol index_of(char c) const;   // throws Error if c is not a letter

    // Encode/decode between character strings and dense symbol strings.
    Symbols encode(std::string_view text) const;
    std::string decode(const Symbols& symbols) const;

    friend bool operator==(const Alphabet& a, const Alphabet& b) {
        return a.letters_ == b.letters_;
    }

private:
    std::string letters_;
    std::array<std::int16_t, 256> index_{};
};

} // namespace wsm

#endif
