#pragma once

#include <string>
#include <vector>

#include "deid/core.hpp"
#include "deid/metrics/delta.hpp"

namespace deid::metrics {

struct AlignedUtterance {
    std::string id;
    std::vector<WordAlignment> words;
};

struct FaResult {
    std::size_t correct = 0;
    std::size_t total = 0;
    double accuracy = 0.0; // correct / total, 0 for an empty corpus
};

// Forced-alignment accuracy: the fraction of words, over the whole corpus,
// whose predicted boundaries pass the chosen delta at tolerance t. Utterances
// are matched by id; ids and per-utterance word counts must agree (Error
// otherwise).
FaResult fa_accuracy(const std::vector<AlignedUtterance>& pred, const std::vector<AlignedUtterance>& gold,
                     double t, DeltaMode mode);

} // namespace deid::metrics
