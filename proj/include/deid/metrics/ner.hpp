#pragma once

#include <map>
#include <vector>

#include "deid/core.hpp"

namespace deid::metrics {

double precision(const ConfusionCounts& c) noexcept;
double recall(const ConfusionCounts& c) noexcept;
// Harmonic mean; 0 when both are 0.
double f1(double precision, double recall) noexcept;

enum class TypeMatching { Typed, Untyped };

// Exact-boundary matching of text spans within one sentence. Typed: a match
// also needs the same type, so a wrong-type prediction counts as both FP and
// FN. Untyped (no-type-error): any type at the right place is a TP.
// Throws ValidationError if either side has overlapping spans.
ConfusionCounts match_text_spans(const std::vector<EntitySpan>& pred, const std::vector<EntitySpan>& gold,
                                 TypeMatching matching);

// Typed counts split by entity type: a prediction of type X feeds X's FP,
// a gold of type X feeds X's FN. Every type has an entry.
std::map<EntityType, ConfusionCounts> typed_counts_by_type(const std::vector<EntitySpan>& pred,
                                                           const std::vector<EntitySpan>& gold);

} // namespace deid::metrics
