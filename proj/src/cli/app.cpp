#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "deid/cli/commands.hpp"
#include "deid/error.hpp"

namespace deid::cli {

namespace {

std::vector<double> parse_sweep(const std::string& list) {
    std::vector<double> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const double v = std::stod(item, &used);
            if (used != item.size() || !(v >= 0.0)) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw CLI::ValidationError("--sweep", "bad tolerance \"" + item + "\"");
        }
    }
    if (out.empty()) throw CLI::ValidationError("--sweep", "empty tolerance list");
    return out;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Speech de-identification: corpus prep, entity tagging, audio redaction and evaluation", "deid"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Read flag defaults from a TOML/INI file (flags on the command line win)");

    PrepArgs prep;
    auto* p = app.add_subcommand("prep", "Build k CoNLL folds from a brat-annotated article corpus");
    p->add_option("input", prep.input_dir, "Directory of <name>.txt + <name>.ann pairs")->required();
    p->add_option("-o,--out", prep.out_dir, "Output directory")->required();
    p->add_option("--remap", prep.remap_file, "Extra label remapping rules");
    p->add_option("-k,--folds", prep.folds, "Number of folds")->check(CLI::Range(std::size_t{2}, std::size_t{1000000}))
        ->capture_default_str();
    p->add_option("--seed", prep.seed, "Shuffle seed")->capture_default_str();

    TagArgs tag;
    auto* t = app.add_subcommand("tag", "Tag sentences with a NER backend");
    t->add_option("input", tag.input, "CoNLL file or plain text (one sentence per line)")->required();
    t->add_option("--format", tag.format, "Input format")
        ->check(CLI::IsMember({"auto", "conll", "text"}))
        ->capture_default_str();
    t->add_option("-b,--backend", tag.backend, "gazetteer:<file> | http:<url> | subprocess:<command>")->required();
    t->add_option("--theta", tag.theta, "Outside-label threshold")->check(CLI::Range(0.0, 1.0))->capture_default_str();
    t->add_flag("--literal-softmax", tag.literal_softmax, "Re-softmax the remaining probabilities instead of rescaling");
    t->add_flag("--strict-bio", tag.strict_bio, "Reject ill-formed BIO sequences");
    t->add_option("--out-json", tag.out_json, "Entity JSON output (stdout when no output is given)");
    t->add_option("--out-conll", tag.out_conll, "Tagged CoNLL output");
    t->add_option("--batch", tag.batch, "Sentences per backend request")->check(CLI::PositiveNumber)
        ->capture_default_str();

    RedactArgs red;
    auto* r = app.add_subcommand("redact", "Redact entity intervals in WAV recordings");
    r->add_option("--wav", red.wav, "Input WAV");
    r->add_option("--textgrid", red.textgrid, "Word alignment TextGrid");
    r->add_option("-e,--entities", red.entities, "Entity JSON")->required();
    r->add_option("-o,--out", red.out, "Output WAV");
    r->add_option("--batch-dir", red.batch_dir, "Directory of <id>.wav + <id>.TextGrid pairs");
    r->add_option("--out-dir", red.out_dir, "Output directory for batch mode");
    r->add_option("--tier", red.tier, "Word tier name")->capture_default_str();
    r->add_option("--id", red.id, "Utterance id in the entity JSON (single mode)");
    r->add_option("--fill", red.fill, "silence | tone[:freq[:amp]] | noise[:amp[:seed]]")->capture_default_str();
    r->add_option("--pad", red.pad, "Seconds added on each side")->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    r->add_flag("--skip-mismatched", red.skip_mismatched, "Skip utterances whose tokens do not match the alignment");
    r->add_option("--timed-out", red.timed_out, "Write the timed entities as JSON");
    r->add_option("-j,--jobs", red.jobs, "Worker threads (0 = CPU count)")->capture_default_str();

    EvalArgs ev;
    std::string sweep;
    auto* e = app.add_subcommand("eval", "Score predictions against gold");
    e->require_subcommand(1);
    auto add_common = [&](CLI::App* sub, const std::string& what) {
        sub->add_option("pred", ev.pred, "Predicted " + what)->required();
        sub->add_option("gold", ev.gold, "Gold " + what)->required();
        sub->add_flag("--json", ev.json, "Machine-readable output");
    };
    auto* fa = e->add_subcommand("fa", "Forced-alignment boundary accuracy");
    add_common(fa, "TextGrid file or directory");
    fa->add_option("-t,--tolerance", ev.tolerance, "Tolerance in seconds")->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    fa->add_option("--mode", ev.mode, "std | outer")->check(CLI::IsMember({"std", "outer"}))->capture_default_str();
    fa->add_option("--sweep", sweep, "Comma-separated tolerances; prints both modes");
    fa->add_option("--tier", ev.tier, "Word tier name")->capture_default_str();
    auto* ner = e->add_subcommand("ner", "Text-level NER scores on CoNLL files");
    add_common(ner, "CoNLL");
    ner->add_flag("--strict-bio", ev.strict_bio, "Reject ill-formed BIO sequences");
    auto* pipe = e->add_subcommand("pipeline", "Time-domain no-type-error scores");
    add_common(pipe, "entity JSON, TextGrid or directory");
    pipe->add_option("-t,--tolerance", ev.tolerance, "Tolerance in seconds")->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    pipe->add_option("--entity-tier", ev.entity_tier, "Entity tier name for TextGrid input")->capture_default_str();

    try {
        app.parse(argc, argv);
        if (!sweep.empty()) ev.sweep = parse_sweep(sweep);
    } catch (const CLI::ParseError& pe) {
        std::ostringstream o, er;
        const int code = app.exit(pe, o, er);
        out << o.str();
        err << er.str();
        return code == 0 ? 0 : 2;
    }

    try {
        if (p->parsed()) return cmd_prep(prep, out, err);
        if (t->parsed()) return cmd_tag(tag, out, err);
        if (r->parsed()) return cmd_redact(red, out, err);
        ev.kind = fa->parsed() ? "fa" : ner->parsed() ? "ner" : "pipeline";
        return cmd_eval(ev, out, err);
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return 1;
    }
}

} // namespace deid::cli
