#include "deid/metrics/fa.hpp"

#include <map>

namespace deid::metrics {

FaResult fa_accuracy(const std::vector<AlignedUtterance>& pred, const std::vector<AlignedUtterance>& gold,
                     double t, DeltaMode mode) {
    if (!(t >= 0.0)) throw ValidationError("tolerance must be non-negative");
    std::map<std::string, const AlignedUtterance*> by_id;
    for (const auto& p : pred) {
        if (!by_id.emplace(p.id, &p).second) throw Error("duplicate predicted utterance \"" + p.id + "\"");
    }
    if (pred.size() != gold.size()) {
        throw Error("prediction has " + std::to_string(pred.size()) + " utterances, gold has " +
                    std::to_string(gold.size()));
    }
    FaResult r;
    for (const auto& g : gold) {
        const auto it = by_id.find(g.id);
        if (it == by_id.end()) throw Error("no prediction for utterance \"" + g.id + "\"");
        const auto& p = *it->second;
        if (p.words.size() != g.words.size()) {
            throw Error("utterance \"" + g.id + "\": " + std::to_string(p.words.size()) + " predicted words vs " +
                        std::to_string(g.words.size()) + " gold words");
        }
        for (std::size_t i = 0; i < g.words.size(); ++i) {
            r.correct += static_cast<std::size_t>(delta(mode, p.words[i].interval, g.words[i].interval, t));
        }
        r.total += g.words.size();
    }
    r.accuracy = r.total == 0 ? 0.0 : static_cast<double>(r.correct) / static_cast<double>(r.total);
    return r;
}

} // namespace deid::metrics
