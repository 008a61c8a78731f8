#include <algorithm>
#include <filesystem>
#include <ostream>
#include <set>

#include <json.hpp>

#include "deid/cli/commands.hpp"
#include "deid/formats/conll.hpp"
#include "deid/prep/brat.hpp"
#include "deid/prep/folds.hpp"
#include "deid/prep/normalize.hpp"
#include "deid/prep/remap.hpp"
#include "deid/prep/sentences.hpp"
#include "deid/prep/tokenize.hpp"
#include "deid/tagging/bio.hpp"
#include "io.hpp"

namespace deid::cli {

namespace fs = std::filesystem;

namespace {

struct PreparedSentence {
    std::vector<prep::Token> tokens;
    std::vector<prep::LabeledSpan> entities;
};

struct Article {
    std::string name;
    std::vector<PreparedSentence> sentences;
};

// Keeps the earliest-starting (then longest) of overlapping entities.
std::vector<EntitySpan> drop_overlaps(std::vector<EntitySpan> spans, const std::string& where, std::ostream& err) {
    std::stable_sort(spans.begin(), spans.end(), [](const EntitySpan& a, const EntitySpan& b) {
        return a.token_start < b.token_start || (a.token_start == b.token_start && a.size() > b.size());
    });
    std::vector<EntitySpan> kept;
    for (const auto& s : spans) {
        if (!kept.empty() && s.token_start < kept.back().token_end) {
            err << "warning: " << where << ": dropping nested/overlapping " << entity_code(s.type) << " entity at token "
                << s.token_start << "\n";
            continue;
        }
        kept.push_back(s);
    }
    return kept;
}

} // namespace

int cmd_prep(const PrepArgs& args, std::ostream& out, std::ostream& err) {
    prep::RemapTable table = prep::RemapTable::defaults();
    if (!args.remap_file.empty()) {
        try {
            table.merge(prep::RemapTable::parse(read_file(args.remap_file)));
        } catch (const ParseError& e) {
            throw Error(args.remap_file + ": " + e.what());
        }
    }

    std::vector<Article> articles;
    std::set<std::string> unmapped;
    for (const auto& txt : list_files(args.input_dir, ".txt")) {
        fs::path ann = txt;
        ann.replace_extension(".ann");
        if (!fs::exists(ann)) throw Error("missing annotation file " + ann.string());

        prep::AnnotatedText raw{read_file(txt), {}};
        try {
            raw.entities = prep::parse_brat_annotations(read_file(ann), raw.text);
        } catch (const ParseError& e) {
            throw Error(ann.string() + ": " + e.what());
        }
        Article article{txt.stem().string(), {}};
        for (const auto& sentence : prep::split_sentences(prep::normalize_text(raw))) {
            auto tokenized = prep::tokenize_annotated(sentence);
            for (const auto& d : tokenized.dropped) {
                err << "warning: " << article.name << ": entity \"" << sentence.entity_text(d)
                    << "\" covers no token, dropped\n";
            }
            if (tokenized.tokens.empty()) continue;
            const auto missing = prep::unmapped_labels(tokenized.entities, table);
            unmapped.insert(missing.begin(), missing.end());
            article.sentences.push_back({std::move(tokenized.tokens), std::move(tokenized.entities)});
        }
        articles.push_back(std::move(article));
    }
    if (!unmapped.empty()) {
        err << "error: " << unmapped.size() << " unmapped entity label(s); add rules to the remap table:\n";
        for (const auto& l : unmapped) err << "  " << l << "\n";
        return 1;
    }

    std::vector<formats::ConllSentence> sentences;
    nlohmann::json article_index = nlohmann::json::array();
    for (const auto& a : articles) {
        article_index.push_back({{"name", a.name}, {"first_sentence", sentences.size()}, {"sentences", a.sentences.size()}});
        for (std::size_t i = 0; i < a.sentences.size(); ++i) {
            const auto& s = a.sentences[i];
            const std::string where = a.name + " sentence " + std::to_string(i + 1);
            auto spans = drop_overlaps(prep::remap_entities(s.entities, table), where, err);
            formats::ConllSentence cs;
            for (const auto& t : s.tokens) cs.tokens.push_back(t.text);
            cs.tags = tagging::encode_bio(spans, cs.tokens.size());
            sentences.push_back(std::move(cs));
        }
    }

    const auto folds = prep::make_folds(sentences.size(), args.folds, args.seed);
    const fs::path out_dir(args.out_dir);
    fs::create_directories(out_dir);
    nlohmann::json fold_index = nlohmann::json::array();
    const int width = std::max<int>(2, static_cast<int>(std::to_string(folds.size()).size()));
    for (std::size_t f = 0; f < folds.size(); ++f) {
        std::string num = std::to_string(f + 1);
        num.insert(0, static_cast<std::size_t>(std::max(0, width - static_cast<int>(num.size()))), '0');
        const std::string file = "fold_" + num + ".conll";
        std::vector<formats::ConllSentence> members;
        for (std::size_t idx : folds[f]) members.push_back(sentences[idx]);
        write_file(out_dir / file, formats::write_conll(members));
        fold_index.push_back({{"file", file}, {"sentences", folds[f]}});
    }
    const nlohmann::json manifest = {{"seed", args.seed},
                                     {"k", args.folds},
                                     {"sentence_count", sentences.size()},
                                     {"articles", std::move(article_index)},
                                     {"folds", std::move(fold_index)}};
    write_file(out_dir / "manifest.json", manifest.dump(2) + "\n");
    out << "wrote " << folds.size() << " folds (" << sentences.size() << " sentences from " << articles.size()
        << " articles) to " << out_dir.string() << "\n";
    return 0;
}

} // namespace deid::cli
