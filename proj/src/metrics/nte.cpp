#include "deid/metrics/nte.hpp"

#include <algorithm>
#include <tuple>

#include "deid/metrics/delta.hpp"

namespace deid::metrics {

Pairing pair_entities(const std::vector<TimedEntity>& pred, const std::vector<TimedEntity>& gold) {
    struct Candidate {
        double overlap;
        std::size_t p;
        std::size_t g;
    };
    std::vector<Candidate> candidates;
    for (std::size_t p = 0; p < pred.size(); ++p) {
        for (std::size_t g = 0; g < gold.size(); ++g) {
            const double ov = interval_overlap(pred[p].interval, gold[g].interval);
            if (ov > 0.0) candidates.push_back({ov, p, g});
        }
    }
    std::sort(candidates.begin(), candidates.end(), [&](const Candidate& a, const Candidate& b) {
        if (a.overlap != b.overlap) return a.overlap > b.overlap;
        return std::tuple(gold[a.g].interval.start, pred[a.p].interval.start, a.g, a.p) <
               std::tuple(gold[b.g].interval.start, pred[b.p].interval.start, b.g, b.p);
    });

    std::vector<bool> pred_used(pred.size(), false);
    std::vector<bool> gold_used(gold.size(), false);
    Pairing pairs;
    for (const auto& c : candidates) {
        if (pred_used[c.p] || gold_used[c.g]) continue;
        pred_used[c.p] = gold_used[c.g] = true;
        pairs.emplace_back(c.p, c.g);
    }
    return pairs;
}

ConfusionCounts nte_counts_for_pairing(const std::vector<TimedEntity>& pred, const std::vector<TimedEntity>& gold,
                                       const Pairing& pairing, double t) {
    ConfusionCounts c;
    for (const auto& [p, g] : pairing) {
        if (delta_outer(pred[p].interval, gold[g].interval, t)) {
            ++c.tp;
        } else {
            ++c.fn;
        }
    }
    c.fn += gold.size() - pairing.size();
    c.fp = pred.size() - pairing.size();
    return c;
}

ConfusionCounts nte_time_counts(const std::vector<TimedEntity>& pred, const std::vector<TimedEntity>& gold, double t) {
    if (!(t >= 0.0)) throw ValidationError("tolerance must be non-negative");
    return nte_counts_for_pairing(pred, gold, pair_entities(pred, gold), t);
}

} // namespace deid::metrics
