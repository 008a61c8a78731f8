#pragma once

#include <string>
#include <vector>

#include "deid/formats/conll.hpp"
#include "deid/formats/textgrid.hpp"
#include "deid/formats/wav.hpp"
#include "deid/labels.hpp"
#include "deid/metrics/fa.hpp"
#include "deid/rng.hpp"

namespace deid::testing {

double uniform(SplitMix64& rng, double lo, double hi);

// Random timed entities inside [0, horizon]; pairwise disjoint when `disjoint`.
std::vector<TimedEntity> random_timed(SplitMix64& rng, std::size_t count, double horizon, bool disjoint);
// Predictions near the gold: jittered copies, dropped ones and spurious ones.
std::vector<TimedEntity> jitter_predictions(SplitMix64& rng, const std::vector<TimedEntity>& gold,
                                            std::size_t max_count, double horizon);

// Non-overlapping spans over `tokens` tokens.
std::vector<EntitySpan> random_spans(SplitMix64& rng, std::size_t tokens);
// Prediction derived from gold with type swaps, boundary moves, drops and additions.
std::vector<EntitySpan> perturb_spans(SplitMix64& rng, const std::vector<EntitySpan>& gold, std::size_t tokens);

LabelDistribution random_distribution(SplitMix64& rng);

formats::TextGridDocument random_textgrid(SplitMix64& rng);
// Same document in Praat's short text form.
std::string write_short_textgrid(const formats::TextGridDocument& doc);

formats::AudioBuffer random_audio(SplitMix64& rng, std::uint32_t rate, std::uint16_t channels, std::size_t frames);

std::vector<formats::ConllSentence> random_conll(SplitMix64& rng);

// Ten gold words with hand-picked boundary errors; expected accuracies are
// listed next to the perturbations in fixtures.cpp.
struct FaFixture {
    metrics::AlignedUtterance gold;
    metrics::AlignedUtterance pred;
};
FaFixture fa_fixture();

} // namespace deid::testing
