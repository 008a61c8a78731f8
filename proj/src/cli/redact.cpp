#include <atomic>
#include <cstdio>
#include <filesystem>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "deid/cli/commands.hpp"
#include "deid/formats/entities_json.hpp"
#include "deid/formats/textgrid.hpp"
#include "deid/formats/wav.hpp"
#include "deid/redaction.hpp"
#include "deid/text.hpp"
#include "deid/timealign.hpp"
#include "io.hpp"

namespace deid::cli {

namespace fs = std::filesystem;

namespace {

// Resolves the selected utterance entries to timed entities against the
// recording's word tier. Entries are consumed in file order, each taking the
// next run of aligned words.
std::vector<TimedEntity> resolve_entities(const std::vector<const formats::UtteranceEntities*>& entries,
                                          const std::vector<WordAlignment>& words, bool skip_mismatched,
                                          std::ostream& diag) {
    std::vector<WordAlignment> aligned;
    for (const auto& w : words) {
        if (!text::is_punctuation_only(w.word)) aligned.push_back(w);
    }
    std::vector<TimedEntity> out;
    std::size_t cursor = 0;
    for (const auto* e : entries) {
        out.insert(out.end(), e->timed.begin(), e->timed.end());
        if (e->spans.empty() && !e->tokens) continue;

        std::vector<std::string> tokens;
        if (e->tokens) {
            tokens = *e->tokens;
        } else if (entries.size() == 1) {
            for (const auto& w : aligned) tokens.push_back(w.word);
        } else {
            throw Error("utterance \"" + e->id + "\": token spans need a \"tokens\" list when several utterances share a recording");
        }
        std::size_t count = 0;
        for (const auto& t : tokens) count += text::is_punctuation_only(t) ? 0 : 1;
        const std::size_t end = std::min(aligned.size(), cursor + count);
        const std::vector<WordAlignment> window(aligned.begin() + static_cast<std::ptrdiff_t>(cursor),
                                                aligned.begin() + static_cast<std::ptrdiff_t>(end));
        cursor = end;
        try {
            if (window.empty()) throw Error("no aligned words left for this utterance");
            const auto mapping = timealign::reconcile(tokens, window);
            const auto timed = timealign::spans_to_intervals(e->spans, window, mapping);
            out.insert(out.end(), timed.begin(), timed.end());
        } catch (const Error& ex) {
            if (!skip_mismatched) throw Error("utterance \"" + e->id + "\": " + ex.what());
            diag << "warning: skipping utterance \"" << e->id << "\": " << ex.what() << "\n";
        }
    }
    return out;
}

struct FileResult {
    std::string id;
    std::vector<TimedEntity> entities;
    double seconds = 0.0;
};

FileResult redact_one(const fs::path& wav, const fs::path& textgrid, const fs::path& out,
                      const std::vector<const formats::UtteranceEntities*>& entries, const std::string& id,
                      const RedactArgs& args, const redaction::Fill& fill, std::ostream& diag) {
    const auto audio = formats::read_wav(read_file(wav));
    formats::TextGridDocument doc;
    try {
        doc = formats::parse_textgrid(read_file(textgrid));
    } catch (const ParseError& e) {
        throw Error(textgrid.string() + ": " + e.what());
    }
    const auto& tier = doc.tier(args.tier);

    FileResult r{id, resolve_entities(entries, tier.entries, args.skip_mismatched, diag), 0.0};
    const auto plan = redaction::build_plan(r.entities, args.pad, fill);
    redaction::RedactionStats stats;
    const auto redacted = redaction::redact(audio, plan, &stats);
    for (const auto& w : stats.warnings) diag << "warning: " << wav.string() << ": " << w << "\n";
    write_file(out, formats::write_wav(redacted));
    r.seconds = static_cast<double>(stats.frames_redacted) / audio.sample_rate;
    return r;
}

std::string summary(const FileResult& r, const fs::path& out) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", r.seconds);
    return "redacted " + std::string(buf) + " s across " + std::to_string(r.entities.size()) + " entities -> " +
           out.string() + "\n";
}

} // namespace

int cmd_redact(const RedactArgs& args, std::ostream& out, std::ostream& err) {
    const auto fill = redaction::parse_fill(args.fill);
    if (!(args.pad >= 0.0)) throw ValidationError("--pad must be non-negative");
    const auto entries = args.entities.empty() ? std::vector<formats::UtteranceEntities>{}
                                               : formats::parse_entities_json(read_file(args.entities));
    std::vector<formats::UtteranceEntities> timed_out;

    if (args.batch_dir.empty()) {
        if (args.wav.empty() || args.textgrid.empty() || args.out.empty()) {
            throw ValidationError("--wav, --textgrid and --out are required (or use --batch-dir)");
        }
        std::vector<const formats::UtteranceEntities*> selected;
        if (!args.id.empty()) {
            const auto* e = formats::find_utterance(entries, args.id);
            if (!e) throw Error("no utterance \"" + args.id + "\" in " + args.entities);
            selected.push_back(e);
        } else {
            for (const auto& e : entries) selected.push_back(&e);
        }
        const std::string id = args.id.empty() ? fs::path(args.wav).stem().string() : args.id;
        const auto r = redact_one(args.wav, args.textgrid, args.out, selected, id, args, fill, err);
        out << summary(r, args.out);
        timed_out.push_back({r.id, r.entities, {}, std::nullopt});
    } else {
        if (args.out_dir.empty()) throw ValidationError("--batch-dir needs --out-dir");
        const auto wavs = list_files(args.batch_dir, ".wav");
        std::vector<FileResult> results(wavs.size());
        std::vector<std::string> errors(wavs.size());
        std::vector<std::string> diags(wavs.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i; (i = next.fetch_add(1)) < wavs.size();) {
                const std::string stem = wavs[i].stem().string();
                fs::path tg = wavs[i];
                tg.replace_extension(".TextGrid");
                std::vector<const formats::UtteranceEntities*> selected;
                if (const auto* e = formats::find_utterance(entries, stem)) selected.push_back(e);
                std::ostringstream diag;
                try {
                    results[i] = redact_one(wavs[i], tg, fs::path(args.out_dir) / wavs[i].filename(), selected, stem,
                                            args, fill, diag);
                } catch (const std::exception& e) {
                    errors[i] = wavs[i].string() + ": " + e.what();
                }
                diags[i] = diag.str();
            }
        };
        std::size_t jobs = args.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : args.jobs;
        jobs = std::min(jobs, std::max<std::size_t>(1, wavs.size()));
        std::vector<std::thread> pool;
        for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();

        bool failed = false;
        for (std::size_t i = 0; i < wavs.size(); ++i) {
            err << diags[i];
            if (!errors[i].empty()) {
                err << "error: " << errors[i] << "\n";
                failed = true;
                continue;
            }
            out << summary(results[i], fs::path(args.out_dir) / wavs[i].filename());
            timed_out.push_back({results[i].id, results[i].entities, {}, std::nullopt});
        }
        if (failed) return 1;
    }
    if (!args.timed_out.empty()) write_file(args.timed_out, formats::write_entities_json(timed_out));
    return 0;
}

} // namespace deid::cli
