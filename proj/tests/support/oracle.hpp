#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "deid/core.hpp"

namespace deid::testing {

struct OracleResult {
    std::vector<std::pair<std::size_t, std::size_t>> pairing; // (pred, gold)
    ConfusionCounts counts;
};

// Exhaustive search over every one-to-one pairing of positively overlapping
// (pred, gold) pairs. Maximizes TP, then the number of pairs. Counting is
// written out independently of the library.
OracleResult nte_oracle(const std::vector<TimedEntity>& pred, const std::vector<TimedEntity>& gold, double t);

// Reference span matcher for text-level scoring.
ConfusionCounts span_oracle(const std::vector<EntitySpan>& pred, const std::vector<EntitySpan>& gold, bool typed);

} // namespace deid::testing
