#include "wsm/validity.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace wsm {

double window_log_probability(const WeightedString& w, std::span<const Symbol> u,
                              std::size_t i) {
    if (i + u.size() > w.size())
        throw std::out_of_range("window exceeds weighted string length");

    double acc = 0.0;
    for (std::size_t j = 0; j < u.size(); ++j) {
        const double p = w.probability(i + j, u[j]);
        if (p == 0.0)
            return -std::numeric_limits<double>::infinity();
        if (p != 1.0)
            acc += std::log2(p);
    }
    return acc;
}

bool is_valid_window(const WeightedString& w, std::span<const Symbol> u,
                     std::size_t i, const Threshold& t) {
    return window_log_probability(w, u, i) >= t.log_inv_z() - kValidityLogTol;
}

} // namespace wsm
