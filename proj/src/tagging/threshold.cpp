#include "deid/tagging/threshold.hpp"

#include <cmath>
#include <string>

namespace deid::tagging {

LabelDistribution apply_threshold(const LabelDistribution& dist, double theta, Renormalization mode) {
    if (!(theta >= 0.0 && theta <= 1.0)) {
        throw ValidationError("threshold must be in [0, 1], got " + std::to_string(theta));
    }
    if (dist.outside() >= theta) return dist;

    std::array<double, kLabelCount> p = dist.probs();
    p[0] = 0.0;
    double mass = 0.0;
    for (std::size_t i = 1; i < kLabelCount; ++i) mass += p[i];
    if (mass <= 0.0) throw ValidationError("degenerate distribution: no entity mass to renormalize");

    if (mode == Renormalization::Proportional) {
        for (std::size_t i = 1; i < kLabelCount; ++i) p[i] /= mass;
    } else {
        double z = 0.0;
        for (auto& v : p) z += (v = std::exp(v));
        for (auto& v : p) v /= z;
    }
    // Rounding can leave the sum a few ulps from 1; from_array tolerates that.
    return LabelDistribution::from_array(p);
}

} // namespace deid::tagging
