#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "deid/core.hpp"

namespace deid::metrics {

// (prediction index, gold index)
using Pairing = std::vector<std::pair<std::size_t, std::size_t>>;

// One-to-one pairing of predictions with gold entities. Candidates are pairs
// with positive temporal overlap, taken greedily by descending overlap; ties
// go to the earlier gold start, then the earlier prediction start, then the
// lower indices. Entity types are ignored.
Pairing pair_entities(const std::vector<TimedEntity>& pred, const std::vector<TimedEntity>& gold);

// Counts for a given pairing: TP = pairs passing delta_outer at t, FN = pairs
// failing it plus unpaired gold, FP = unpaired predictions.
ConfusionCounts nte_counts_for_pairing(const std::vector<TimedEntity>& pred, const std::vector<TimedEntity>& gold,
                                       const Pairing& pairing, double t);

// Time-domain no-type-error counts for one utterance.
ConfusionCounts nte_time_counts(const std::vector<TimedEntity>& pred, const std::vector<TimedEntity>& gold, double t);

} // namespace deid::metrics
