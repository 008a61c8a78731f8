#include <cstdio>
#include <filesystem>
#include <map>
#include <ostream>

#include <json.hpp>

#include "deid/cli/commands.hpp"
#include "deid/formats/conll.hpp"
#include "deid/formats/entities_json.hpp"
#include "deid/formats/textgrid.hpp"
#include "deid/metrics/fa.hpp"
#include "deid/metrics/ner.hpp"
#include "deid/metrics/nte.hpp"
#include "deid/metrics/report.hpp"
#include "deid/tagging/bio.hpp"
#include "io.hpp"

namespace deid::cli {

namespace fs = std::filesystem;

namespace {

// (id, document) for a TextGrid file or every TextGrid in a directory; the id
// is the file stem.
std::vector<std::pair<std::string, formats::TextGridDocument>> load_textgrids(const fs::path& path) {
    std::vector<fs::path> files;
    if (fs::is_directory(path)) {
        files = list_files(path, ".TextGrid");
    } else {
        files.push_back(path);
    }
    std::vector<std::pair<std::string, formats::TextGridDocument>> out;
    for (const auto& f : files) {
        try {
            out.emplace_back(f.stem().string(), formats::parse_textgrid(read_file(f)));
        } catch (const ParseError& e) {
            throw Error(f.string() + ": " + e.what());
        }
    }
    return out;
}

std::vector<metrics::AlignedUtterance> load_alignments(const fs::path& path, const std::string& tier) {
    std::vector<metrics::AlignedUtterance> out;
    for (auto& [id, doc] : load_textgrids(path)) {
        try {
            out.push_back({id, doc.tier(tier).entries});
        } catch (const Error& e) {
            throw Error(id + ": " + e.what());
        }
    }
    return out;
}

using TimedCorpus = std::vector<std::pair<std::string, std::vector<TimedEntity>>>;

TimedCorpus load_timed(const fs::path& path, const std::string& entity_tier) {
    TimedCorpus out;
    if (!fs::is_directory(path) && has_extension(path, ".json")) {
        for (const auto& u : formats::parse_entities_json(read_file(path))) {
            if (!u.spans.empty()) {
                throw Error(path.string() + ": utterance \"" + u.id +
                            "\" has token spans; the pipeline evaluation needs timed entities");
            }
            out.emplace_back(u.id, u.timed);
        }
        return out;
    }
    for (auto& [id, doc] : load_textgrids(path)) {
        try {
            out.emplace_back(id, formats::timed_entities_from_tier(doc.tier(entity_tier)));
        } catch (const Error& e) {
            throw Error(id + ": " + e.what());
        }
    }
    return out;
}

std::string fmt3(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

int eval_fa(const EvalArgs& args, std::ostream& out) {
    const auto pred = load_alignments(args.pred, args.tier);
    const auto gold = load_alignments(args.gold, args.tier);
    if (args.sweep.empty()) {
        const auto mode = args.mode == "std" ? metrics::DeltaMode::Std : metrics::DeltaMode::Outer;
        const auto r = metrics::fa_accuracy(pred, gold, args.tolerance, mode);
        if (args.json) {
            out << nlohmann::json{{"tolerance", args.tolerance}, {"mode", args.mode}, {"accuracy", r.accuracy},
                                  {"correct", r.correct}, {"words", r.total}}
                       .dump(2)
                << "\n";
        } else {
            out << "accuracy [" << args.mode << "] at t=" << args.tolerance << ": " << fmt3(r.accuracy) << " ("
                << r.correct << "/" << r.total << " words)\n";
        }
        return 0;
    }
    nlohmann::json rows = nlohmann::json::array();
    std::string table = "Tolerance (s)      [std]   [outer]\n";
    for (double t : args.sweep) {
        const auto s = metrics::fa_accuracy(pred, gold, t, metrics::DeltaMode::Std);
        const auto o = metrics::fa_accuracy(pred, gold, t, metrics::DeltaMode::Outer);
        char line[96];
        std::snprintf(line, sizeof line, "<=%-14.2f %8.3f %9.3f\n", t, s.accuracy, o.accuracy);
        table += line;
        rows.push_back({{"tolerance", t}, {"std", s.accuracy}, {"outer", o.accuracy}, {"words", s.total}});
    }
    if (args.json) {
        out << nlohmann::json{{"sweep", rows}}.dump(2) << "\n";
    } else {
        out << table;
    }
    return 0;
}

int eval_ner(const EvalArgs& args, std::ostream& out) {
    const auto pred = formats::parse_conll(read_file(args.pred));
    const auto gold = formats::parse_conll(read_file(args.gold));
    if (pred.size() != gold.size()) {
        throw Error("prediction has " + std::to_string(pred.size()) + " sentences, gold has " +
                    std::to_string(gold.size()));
    }
    const auto policy = args.strict_bio ? tagging::DecodePolicy::Strict : tagging::DecodePolicy::Lenient;
    std::map<EntityType, ConfusionCounts> per_type;
    for (EntityType t : kEntityTypes) per_type[t] = {};
    ConfusionCounts nte;
    for (std::size_t i = 0; i < gold.size(); ++i) {
        if (pred[i].tokens.size() != gold[i].tokens.size()) {
            throw Error("sentence " + std::to_string(i + 1) + ": token counts differ");
        }
        const auto p = tagging::decode_bio(pred[i].tags, policy);
        const auto g = tagging::decode_bio(gold[i].tags, policy);
        for (const auto& [type, c] : metrics::typed_counts_by_type(p, g)) per_type[type] += c;
        nte += metrics::match_text_spans(p, g, metrics::TypeMatching::Untyped);
    }
    const auto report = metrics::build_report(per_type, nte);
    out << (args.json ? metrics::render_json(report) : metrics::render_table(report));
    return 0;
}

int eval_pipeline(const EvalArgs& args, std::ostream& out, std::ostream& err) {
    const auto pred = load_timed(args.pred, args.entity_tier);
    const auto gold = load_timed(args.gold, args.entity_tier);
    std::map<std::string, const std::vector<TimedEntity>*> pred_by_id;
    for (const auto& [id, ents] : pred) {
        if (!pred_by_id.emplace(id, &ents).second) throw Error("duplicate predicted utterance \"" + id + "\"");
    }
    std::map<std::string, bool> gold_ids;
    for (const auto& [id, ents] : gold) gold_ids[id] = true;
    for (const auto& [id, ents] : pred) {
        if (!gold_ids.count(id)) throw Error("predicted utterance \"" + id + "\" has no gold counterpart");
    }
    ConfusionCounts total;
    const std::vector<TimedEntity> none;
    for (const auto& [id, g] : gold) {
        const auto it = pred_by_id.find(id);
        if (it == pred_by_id.end()) err << "note: no prediction for utterance \"" << id << "\"\n";
        total += metrics::nte_time_counts(it == pred_by_id.end() ? none : *it->second, g, args.tolerance);
    }
    const auto report = metrics::build_nte_report(total);
    out << (args.json ? metrics::render_json(report) : metrics::render_table(report));
    return 0;
}

} // namespace

int cmd_eval(const EvalArgs& args, std::ostream& out, std::ostream& err) {
    if (!(args.tolerance >= 0.0)) throw ValidationError("tolerance must be non-negative");
    if (args.kind == "fa") return eval_fa(args, out);
    if (args.kind == "ner") return eval_ner(args, out);
    if (args.kind == "pipeline") return eval_pipeline(args, out, err);
    throw ValidationError("unknown evaluation \"" + args.kind + "\"");
}

} // namespace deid::cli
