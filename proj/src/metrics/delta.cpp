#include "deid/metrics/delta.hpp"

#include <cmath>

namespace deid::metrics {

// Both functions compare the same rounded differences, so
// delta_std <= delta_outer holds exactly in floating point.

int delta_std(const TimeInterval& pred, const TimeInterval& gold, double t) noexcept {
    return std::abs(pred.start - gold.start) <= t && std::abs(pred.end - gold.end) <= t ? 1 : 0;
}

int delta_outer(const TimeInterval& pred, const TimeInterval& gold, double t) noexcept {
    return pred.start - gold.start <= t && gold.end - pred.end <= t ? 1 : 0;
}

int delta(DeltaMode mode, const TimeInterval& pred, const TimeInterval& gold, double t) noexcept {
    return mode == DeltaMode::Std ? delta_std(pred, gold, t) : delta_outer(pred, gold, t);
}

} // namespace deid::metrics
