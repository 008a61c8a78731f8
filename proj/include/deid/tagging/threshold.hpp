#pragma once

#include "deid/labels.hpp"

namespace deid::tagging {

enum class Renormalization {
    // Zero p(O) and rescale the entity labels to sum to 1. Same as pushing
    // the O logit to -inf and re-running softmax on the original logits.
    Proportional,
    // Zero p(O) and apply softmax to the probability vector itself.
    LiteralSoftmax,
};

// Confidence threshold on the "not an entity" label: if p(O) >= theta the
// distribution is returned unchanged, otherwise p(O) is zeroed and the rest
// renormalized. Throws ValidationError for theta outside [0, 1] and for the
// degenerate case p(O) < theta with no entity mass.
LabelDistribution apply_threshold(const LabelDistribution& dist, double theta,
                                  Renormalization mode = Renormalization::Proportional);

} // namespace deid::tagging
