#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "deid/labels.hpp"
#include "deid/tagging/bio.hpp"
#include "deid/tagging/threshold.hpp"

namespace deid::tagging {

using Tokens = std::vector<std::string>;
using SentenceDistributions = std::vector<LabelDistribution>;

// Produces one label distribution per token for a batch of sentences.
class Tagger {
public:
    virtual ~Tagger() = default;

    virtual std::vector<SentenceDistributions> distributions(const std::vector<Tokens>& sentences) = 0;
    // Labels the backend can emit, for diagnostics.
    virtual std::vector<std::string> labels() { return {}; }
};

struct TaggedSentence {
    Tokens tokens;
    SentenceDistributions distributions;
    std::vector<EntitySpan> spans;
};

struct TagOptions {
    std::optional<double> theta; // no thresholding when empty
    Renormalization renormalization = Renormalization::Proportional;
    DecodePolicy policy = DecodePolicy::Lenient;
};

// Thresholds (if requested) and decodes already-computed distributions.
TaggedSentence finish_sentence(Tokens tokens, SentenceDistributions dists, const TagOptions& options);

// Throws Error("empty sentence") for an empty token list and ProtocolError if
// the backend returns the wrong number of distributions.
TaggedSentence tag(const Tokens& tokens, Tagger& tagger, const TagOptions& options = {});
std::vector<TaggedSentence> tag_all(const std::vector<Tokens>& sentences, Tagger& tagger,
                                    const TagOptions& options = {});

// Backend descriptors accepted on the command line:
//   gazetteer:<lexicon-file>   http:<url>   subprocess:<command>
// `http:` with an empty URL falls back to the DEID_TAGGER_URL environment
// variable.
struct BackendSpec {
    enum class Kind { Gazetteer, Http, Subprocess } kind;
    std::string target;

    static BackendSpec parse(std::string_view spec);
};

std::unique_ptr<Tagger> make_tagger(const BackendSpec& spec);

} // namespace deid::tagging
