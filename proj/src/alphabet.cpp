#include "wsm/alphabet.hpp"

#include "wsm/errors.hpp"

namespace wsm {

namespace {
constexpr std::string_view kUniverse =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789";
}

Alphabet::Alphabet(std::string_view letters) {
    if (letters.size() < 2)
        throw Error("alphabet needs at least two letters");
    if (letters.size() > kMaxSize)
        throw Error("alphabet larger than " + std::to_string(kMaxSize) + " letters");
    index_.fill(-1);
    for (char c : letters) {
        auto u = static_cast<unsigned char>(c);
        if (index_[u] >= 0)
            throw Error(std::string("duplicate letter '") + c + "' in alphabet");
        index_[u] = static_cast<std::int16_t>(letters_.size());
        letters_.push_back(c);
    }
}

Alphabet Alphabet::generic(std::uint32_t sigma) {
    if (sigma < 2 || sigma > kUniverse.size())
        throw Error("generic alphabet size must be in [2, " +
                    std::to_string(kUniverse.size()) + "]");
    return Alphabet(kUniverse.substr(0, sigma));
}

Symbol Alphabet::index_of(char c) const {
    auto idx = index_[static_cast<unsigned char>(c)];
    if (idx < 0)
        throw Error(std::string("letter '") + c + "' not in alphabet");
    return static_cast<Symbol>(idx);
}

Symbols Alphabet::encode(std::string_view text) const {
    Symbols out;
    out.reserve(text.size());
    for (char c : text) out.push_back(index_of(c));
    return out;
}

std::string Alphabet::decode(const Symbols& symbols) const {
    std::string out;
    out.reserve(symbols.size());
    for (Symbol s : symbols) {
        if (s >= size())
            throw Error("symbol index out of range for alphabet");
        out.push_back(letters_[s]);
    }
    return out;
}

} // namespace wsm
