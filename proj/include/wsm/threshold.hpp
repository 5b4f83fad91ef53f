#ifndef WSM_THRESHOLD_HPP
#define WSM_THRESHOLD_HPP

#include <cmath>
#include <stdexcept>

namespace wsm {

// Absolute tolerance on the log2 scale for validity comparisons. Shared by
// pipeline and oracle so both classify borderline windows identically.
inline constexpr double kValidityLogTol = 1e-9;

// Cumulative weight threshold 1/z. Only z >= 2 is supported: below that a
// position may hold several letters above 1 - 1/z and the colouring scheme
// breaks down.
class Threshold {
public:
    explicit Threshold(double z) : z_(z) {
        if (!(z >= 2.0) || !std::isfinite(z))
            throw std::invalid_argument("threshold parameter z must be >= 2");
        log_inv_z_ = -std::log2(z);
    }

    double z() const { return z_; }
    double log_inv_z() const { return log_inv_z_; }     // log2(1/z)
    double heavy_floor() const { return 1.0 - 1.0 / z_; }

private:
    double z_;
    double log_inv_z_;
};

} // namespace wsm

#endif
