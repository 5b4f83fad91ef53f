#include "wsm/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace wsm {

std::int64_t black_bound(const Threshold& t) {
    const double z = t.z();
    // log1p keeps both logs accurate when z is large and the arguments
    // approach 1.
    const double log2_z = std::log2(z);
    const double log2_ratio = std::log1p(1.0 / (z - 1.0)) / std::numbers::ln2;
    const double ratio = log2_z / log2_ratio;

    const double nearest = std::round(ratio);
    if (std::abs(ratio - nearest) < 1e-9) {
        // Borderline ceiling: k black positions are feasible iff
        // (1 - 1/z)^k >= 1/z, i.e. log2(z) + k*log2(1 - 1/z) >= 0.
        const double log2_heavy = std::log1p(-1.0 / z) / std::numbers::ln2;
        const double slack = log2_z + nearest * log2_heavy;
        return static_cast<std::int64_t>(nearest) + (slack > 1e-12 ? 1 : 0);
    }
    return static_cast<std::int64_t>(std::ceil(ratio));
}

bool ell_refined_ok(const Threshold& t) {
    return static_cast<double>(black_bound(t)) <= t.z() * std::log2(t.z());
}

bool weight_ratio_ok(double z, std::size_t m, std::uint32_t sigma) {
    const double log_z = std::log2(z);
    const double log_m = std::log2(static_cast<double>(m));
    const double log_sigma = std::log2(static_cast<double>(sigma));
    const double first = 1.0 / log_z;
    const double second = log_sigma / (log_z * (log_m + std::log2(log_sigma)));
    return z / static_cast<double>(m) < std::min(first, second);
}

} // namespace wsm
