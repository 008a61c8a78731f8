#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace deid::cli {

struct PrepArgs {
    std::string input_dir;
    std::string out_dir;
    std::string remap_file; // merged over the default table when set
    std::size_t folds = 10;
    std::uint64_t seed = 42;
};

struct TagArgs {
    std::string input;
    std::string format = "auto"; // auto | conll | text
    std::string backend;
    double theta = 0.9;
    bool literal_softmax = false;
    bool strict_bio = false;
    std::string out_json;
    std::string out_conll;
    std::size_t batch = 64;
};

struct RedactArgs {
    std::string wav;
    std::string textgrid;
    std::string entities;
    std::string out;
    std::string batch_dir;
    std::string out_dir;
    std::string tier = "words";
    std::string id;
    std::string fill = "silence";
    double pad = 0.0;
    bool skip_mismatched = false;
    std::string timed_out;
    std::size_t jobs = 0; // 0 = hardware concurrency
};

struct EvalArgs {
    std::string kind; // fa | ner | pipeline
    std::string pred;
    std::string gold;
    double tolerance = 0.25;
    std::string mode = "outer";
    std::vector<double> sweep;
    bool json = false;
    bool strict_bio = false;
    std::string tier = "words";
    std::string entity_tier = "entities";
};

// Each returns the process exit code; results go to `out`, diagnostics to `err`.
int cmd_prep(const PrepArgs& args, std::ostream& out, std::ostream& err);
int cmd_tag(const TagArgs& args, std::ostream& out, std::ostream& err);
int cmd_redact(const RedactArgs& args, std::ostream& out, std::ostream& err);
int cmd_eval(const EvalArgs& args, std::ostream& out, std::ostream& err);

// Full command line, including argv[0].
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace deid::cli
