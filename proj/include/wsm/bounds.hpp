#ifndef WSM_BOUNDS_HPP
#define WSM_BOUNDS_HPP

#include <cstdint>

#include "wsm/threshold.hpp"

namespace wsm {

// Upper bound on the number of black positions a valid factor can contain:
// ceil(log z / log(z/(z-1))), evaluated in base 2 (the ratio is
// base-independent). Near-integer ratios are settled by checking
// (1 - 1/z)^k >= 1/z in log space instead of trusting the ceiling.
std::int64_t black_bound(const Threshold& t);

// Self-check hook: black_bound(t) <= z * log2(z).
bool ell_refined_ok(const Threshold& t);

// Gate for the average-case sublinear claim:
//   z/m < min{ 1/log z, log sigma / (log z (log m + log log sigma)) }
// with base-2 logarithms. Advisory only; the pipelines run either way.
bool weight_ratio_ok(double z, std::size_t m, std::uint32_t sigma);

} // namespace wsm

#endif
