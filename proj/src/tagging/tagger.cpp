#include "deid/tagging/tagger.hpp"

#include <cstdlib>

#include "deid/tagging/external.hpp"
#include "deid/tagging/gazetteer.hpp"

namespace deid::tagging {

TaggedSentence finish_sentence(Tokens tokens, SentenceDistributions dists, const TagOptions& options) {
    if (dists.size() != tokens.size()) {
        throw ProtocolError("tagger returned " + std::to_string(dists.size()) + " distributions for " +
                            std::to_string(tokens.size()) + " tokens");
    }
    if (options.theta) {
        for (auto& d : dists) d = apply_threshold(d, *options.theta, options.renormalization);
    }
    std::vector<Label> labels;
    labels.reserve(dists.size());
    for (const auto& d : dists) labels.push_back(d.argmax());
    TaggedSentence out{std::move(tokens), std::move(dists), {}};
    out.spans = decode_bio(labels, options.policy);
    return out;
}

TaggedSentence tag(const Tokens& tokens, Tagger& tagger, const TagOptions& options) {
    if (tokens.empty()) throw Error("empty sentence");
    auto all = tagger.distributions({tokens});
    if (all.size() != 1) throw ProtocolError("tagger returned the wrong number of sentences");
    return finish_sentence(tokens, std::move(all.front()), options);
}

std::vector<TaggedSentence> tag_all(const std::vector<Tokens>& sentences, Tagger& tagger,
                                    const TagOptions& options) {
    for (std::size_t i = 0; i < sentences.size(); ++i) {
        if (sentences[i].empty()) throw Error("empty sentence at index " + std::to_string(i));
    }
    if (sentences.empty()) return {};
    auto all = tagger.distributions(sentences);
    if (all.size() != sentences.size()) throw ProtocolError("tagger returned the wrong number of sentences");
    std::vector<TaggedSentence> out;
    out.reserve(sentences.size());
    for (std::size_t i = 0; i < sentences.size(); ++i) {
        out.push_back(finish_sentence(sentences[i], std::move(all[i]), options));
    }
    return out;
}

BackendSpec BackendSpec::parse(std::string_view spec) {
    const std::size_t colon = spec.find(':');
    const std::string_view kind = spec.substr(0, colon);
    std::string target = colon == std::string_view::npos ? "" : std::string(spec.substr(colon + 1));
    if (kind == "gazetteer") {
        if (target.empty()) throw ValidationError("gazetteer backend needs a lexicon file");
        return {Kind::Gazetteer, std::move(target)};
    }
    if (kind == "http") {
        if (target.empty()) {
            if (const char* env = std::getenv("DEID_TAGGER_URL"); env && *env) target = env;
        }
        if (target.empty()) throw ValidationError("http backend needs a URL (or DEID_TAGGER_URL)");
        return {Kind::Http, std::move(target)};
    }
    if (kind == "subprocess") {
        if (target.empty()) throw ValidationError("subprocess backend needs a command");
        return {Kind::Subprocess, std::move(target)};
    }
    throw ValidationError("unknown tagger backend \"" + std::string(spec) +
                          "\" (expected gazetteer:<file>, http:<url> or subprocess:<command>)");
}

std::unique_ptr<Tagger> make_tagger(const BackendSpec& spec) {
    switch (spec.kind) {
    case BackendSpec::Kind::Gazetteer:
        return std::make_unique<Gazetteer>(Gazetteer::load(spec.target));
    case BackendSpec::Kind::Http:
        return std::make_unique<HttpTagger>(spec.target);
    case BackendSpec::Kind::Subprocess:
        return std::make_unique<SubprocessTagger>(spec.target);
    }
    throw ValidationError("unknown tagger backend");
}

} // namespace deid::tagging
