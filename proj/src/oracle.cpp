#include "wsm/oracle.hpp"

#include <cmath>
#include <limits>

#include "wsm/errors.hpp"

namespace wsm::oracle {

namespace {

// Probability of `letter` at position i, read straight off the entry list.
double prob_at(const WeightedString& w, std::size_t i, Symbol letter) {
    for (const auto& e : w.position(i))
        if (e.letter == letter) return e.prob;
    return 0.0;
}

} // namespace

std::vector<std::size_t> oracle_wpm(const WeightedString& x,
                                    std::span<const Symbol> y,
                                    const Threshold& t) {
    const std::size_t m = x.size();
    if (m == 0)
        throw Error("pattern must be non-empty");
    if (m > y.size())
        throw PatternLongerThanTextError("pattern longer than text");

    const double cut = t.log_inv_z() - kValidityLogTol;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i + m <= y.size(); ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            const double p = prob_at(x, j, y[i + j]);
            if (p == 0.0) {
                acc = -std::numeric_limits<double>::infinity();
                break;
            }
            if (p != 1.0) acc += std::log2(p);
        }
        if (acc >= cut) out.push_back(i);
    }
    return out;
}

std::vector<std::size_t> oracle_wtm(std::span<const Symbol> x,
                                    const WeightedString& y,
                                    const Threshold& t) {
    const std::size_t m = x.size();
    if (m == 0)
        throw Error("pattern must be non-empty");
    if (m > y.size())
        throw PatternLongerThanTextError("pattern longer than text");

    const double cut = t.log_inv_z() - kValidityLogTol;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i + m <= y.size(); ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            const double p = prob_at(y, i + j, x[j]);
            if (p == 0.0) {
                acc = -std::numeric_limits<double>::infinity();
                break;
            }
            if (p != 1.0) acc += std::log2(p);
        }
        if (acc >= cut) out.push_back(i);
    }
    return out;
}

} // namespace wsm::oracle
