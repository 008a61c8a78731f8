#include <ostream>

#include "deid/cli/commands.hpp"
#include "deid/formats/conll.hpp"
#include "deid/formats/entities_json.hpp"
#include "deid/prep/tokenize.hpp"
#include "deid/tagging/tagger.hpp"
#include "deid/text.hpp"
#include "io.hpp"

namespace deid::cli {

namespace {

struct InputSentence {
    std::string id;
    tagging::Tokens tokens;
};

// Plain text: one sentence per line, optionally `id<TAB>text`.
std::vector<InputSentence> read_text_input(std::string_view src) {
    std::vector<InputSentence> out;
    std::size_t pos = 0;
    while (pos < src.size()) {
        std::size_t eol = src.find('\n', pos);
        if (eol == std::string_view::npos) eol = src.size();
        std::string_view line = src.substr(pos, eol - pos);
        pos = eol + 1;
        if (text::trim(line).empty()) continue;
        std::string id;
        if (const std::size_t tab = line.find('\t'); tab != std::string_view::npos) {
            id = std::string(text::trim(line.substr(0, tab)));
            line = line.substr(tab + 1);
        }
        if (id.empty()) id = "s" + std::to_string(out.size() + 1);
        auto tokens = prep::tokenize_words(line);
        if (tokens.empty()) continue;
        out.push_back({std::move(id), std::move(tokens)});
    }
    return out;
}

std::vector<InputSentence> read_conll_input(std::string_view src) {
    std::vector<InputSentence> out;
    for (auto& s : formats::parse_conll_raw(src)) {
        out.push_back({"s" + std::to_string(out.size() + 1), std::move(s.tokens)});
    }
    return out;
}

} // namespace

int cmd_tag(const TagArgs& args, std::ostream& out, std::ostream& err) {
    const std::string src = read_file(args.input);
    const bool conll = args.format == "conll" || (args.format == "auto" && has_extension(args.input, ".conll"));
    const auto input = conll ? read_conll_input(src) : read_text_input(src);

    auto tagger = tagging::make_tagger(tagging::BackendSpec::parse(args.backend));
    tagging::TagOptions options;
    options.theta = args.theta;
    options.renormalization =
        args.literal_softmax ? tagging::Renormalization::LiteralSoftmax : tagging::Renormalization::Proportional;
    options.policy = args.strict_bio ? tagging::DecodePolicy::Strict : tagging::DecodePolicy::Lenient;

    std::vector<formats::UtteranceEntities> entities;
    std::vector<formats::ConllSentence> tagged;
    const std::size_t batch = std::max<std::size_t>(1, args.batch);
    std::size_t spans = 0;
    for (std::size_t b = 0; b < input.size(); b += batch) {
        std::vector<tagging::Tokens> sentences;
        for (std::size_t i = b; i < std::min(input.size(), b + batch); ++i) sentences.push_back(input[i].tokens);
        auto results = tagging::tag_all(sentences, *tagger, options);
        for (std::size_t i = 0; i < results.size(); ++i) {
            auto& r = results[i];
            std::vector<Label> labels = tagging::encode_bio(r.spans, r.tokens.size());
            spans += r.spans.size();
            entities.push_back({input[b + i].id, {}, r.spans, r.tokens});
            tagged.push_back({std::move(r.tokens), std::move(labels)});
        }
    }

    const std::string json = formats::write_entities_json(entities);
    if (!args.out_json.empty()) write_file(args.out_json, json);
    if (!args.out_conll.empty()) write_file(args.out_conll, formats::write_conll(tagged));
    if (args.out_json.empty() && args.out_conll.empty()) out << json;
    err << "tagged " << input.size() << " sentences, " << spans << " entities\n";
    return 0;
}

} // namespace deid::cli
