#include "wsm/colouring.hpp"

#include <stdexcept>

#include "wsm/errors.hpp"

namespace wsm {

Colouring colour_positions(const WeightedString& x, const Threshold& t) {
    if (x.size() == 0)
        throw std::invalid_argument("cannot colour an empty weighted string");

    const double floor = t.heavy_floor();
    const std::size_t n = x.size();

    Colouring c;
    c.colours.resize(n);
    c.heavy.assign(n, kNoHeavy);
    c.black_rank.assign(n, kNotBlack);

    for (std::size_t i = 0; i < n; ++i) {
        Colour colour = Colour::Black;
        for (const auto& e : x.position(i)) {
            if (e.prob > floor) {
                colour = (e.prob == 1.0) ? Colour::White : Colour::Grey;
                c.heavy[i] = e.letter;
                break;   // unique for z >= 2
            }
        }
        c.colours[i] = colour;
        if (colour == Colour::Black)
            c.black_rank[i] = static_cast<std::uint32_t>(c.black_count++);
    }
    return c;
}

BlackMatrix::BlackMatrix(std::size_t rows, std::uint32_t sigma)
    : rows_(rows), sigma_(sigma), cells_(rows * sigma, 0) {}

BlackMatrix build_black_matrix(const WeightedString& x, const Colouring& c) {
    BlackMatrix a(c.black_count, x.sigma());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!c.is_black(i)) continue;
        const std::size_t row = c.black_rank[i];
        for (const auto& e : x.position(i))
            a.set(row, e.letter);
    }
    return a;
}

Interval longest_clean_run(const Colouring& c) {
    if (c.black_count >= c.size())
        throw NoCleanRunError("every position is black; no clean run exists");

    Interval best;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= c.size(); ++i) {
        if (i == c.size() || c.is_black(i)) {
            if (i - start > best.length) best = {start, i - start};
            start = i + 1;
        }
    }
    return best;   // leftmost maximal run wins ties
}

Symbols heavy_projection(const WeightedString& x, const Colouring& c,
                         Interval range) {
    if (range.start + range.length > x.size())
        throw std::out_of_range("projection range exceeds string length");

    Symbols out;
    out.reserve(range.length);
    for (std::size_t i = range.start; i < range.start + range.length; ++i) {
        if (c.is_black(i))
            throw BlackInRangeError("projection range contains black position " +
                                    std::to_string(i));
        out.push_back(c.heavy[i]);
    }
    return out;
}

} // namespace wsm
