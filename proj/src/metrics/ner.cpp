#include "deid/metrics/ner.hpp"

#include <algorithm>

namespace deid::metrics {

double precision(const ConfusionCounts& c) noexcept {
    const std::size_t d = c.tp + c.fp;
    return d == 0 ? 0.0 : static_cast<double>(c.tp) / static_cast<double>(d);
}

double recall(const ConfusionCounts& c) noexcept {
    const std::size_t d = c.tp + c.fn;
    return d == 0 ? 0.0 : static_cast<double>(c.tp) / static_cast<double>(d);
}

double f1(double p, double r) noexcept {
    const double d = p + r;
    return d == 0.0 ? 0.0 : 2.0 * p * r / d;
}

namespace {

bool matches(const EntitySpan& a, const EntitySpan& b, TypeMatching m) {
    return a.token_start == b.token_start && a.token_end == b.token_end &&
           (m == TypeMatching::Untyped || a.type == b.type);
}

} // namespace

ConfusionCounts match_text_spans(const std::vector<EntitySpan>& pred, const std::vector<EntitySpan>& gold,
                                 TypeMatching matching) {
    validate_spans(pred);
    validate_spans(gold);
    // Non-overlapping sides make exact-boundary matches one-to-one.
    std::size_t tp = 0;
    for (const auto& p : pred) {
        tp += static_cast<std::size_t>(
            std::any_of(gold.begin(), gold.end(), [&](const EntitySpan& g) { return matches(p, g, matching); }));
    }
    return {tp, pred.size() - tp, gold.size() - tp};
}

std::map<EntityType, ConfusionCounts> typed_counts_by_type(const std::vector<EntitySpan>& pred,
                                                           const std::vector<EntitySpan>& gold) {
    validate_spans(pred);
    validate_spans(gold);
    std::map<EntityType, ConfusionCounts> out;
    for (EntityType t : kEntityTypes) out[t] = {};
    for (const auto& p : pred) {
        const bool hit = std::any_of(gold.begin(), gold.end(),
                                     [&](const EntitySpan& g) { return matches(p, g, TypeMatching::Typed); });
        ++(hit ? out[p.type].tp : out[p.type].fp);
    }
    for (const auto& g : gold) {
        const bool hit = std::any_of(pred.begin(), pred.end(),
                                     [&](const EntitySpan& p) { return matches(p, g, TypeMatching::Typed); });
        if (!hit) ++out[g.type].fn;
    }
    return out;
}

} // namespace deid::metrics
