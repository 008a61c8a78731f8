#include <sstream>

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "deid/cli/commands.hpp"
#include "deid/deid.hpp"

namespace py = pybind11;
using namespace deid;

namespace {

std::string as_bytes(const py::object& data) {
    if (py::isinstance<py::bytes>(data)) return data.cast<std::string>();
    if (py::isinstance<py::str>(data)) return data.cast<std::string>();
    return py::bytes(data).cast<std::string>();
}

std::vector<std::string> tags_to_strings(const std::vector<Label>& labels) {
    std::vector<std::string> out;
    for (const auto& l : labels) out.push_back(l.str());
    return out;
}

std::vector<Label> strings_to_tags(const std::vector<std::string>& tags) {
    std::vector<Label> out;
    for (const auto& t : tags) out.push_back(label_from_string(t));
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Speech de-identification: formats, tagging, time alignment, redaction and metrics";

    static py::exception<Error> error(m, "DeidError", PyExc_ValueError);
    static py::exception<ParseError> parse_error(m, "ParseError", error.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError& e) {
            py::set_error(parse_error, e.what());
        } catch (const Error& e) {
            py::set_error(error, e.what());
        }
    });

    py::enum_<EntityType>(m, "EntityType")
        .value("PER", EntityType::Person)
        .value("LOC", EntityType::Location)
        .value("ORG", EntityType::Organization)
        .value("CUR", EntityType::Currency)
        .value("MONEY", EntityType::MoneyAmount)
        .def_property_readonly("code", [](EntityType t) { return std::string(entity_code(t)); })
        .def_property_readonly("display_name", [](EntityType t) { return std::string(entity_name(t)); });

    py::class_<TimeInterval>(m, "TimeInterval")
        .def(py::init(&TimeInterval::make), py::arg("start"), py::arg("end"))
        .def_readonly("start", &TimeInterval::start)
        .def_readonly("end", &TimeInterval::end)
        .def_property_readonly("length", &TimeInterval::length)
        .def(py::self == py::self)
        .def("__repr__", [](const TimeInterval& i) {
            std::ostringstream o;
            o << "TimeInterval(" << i.start << ", " << i.end << ")";
            return o.str();
        });

    py::class_<WordAlignment>(m, "WordAlignment")
        .def(py::init([](std::string word, double start, double end) {
                 return WordAlignment{std::move(word), TimeInterval::make(start, end)};
             }),
             py::arg("word"), py::arg("start"), py::arg("end"))
        .def_readwrite("word", &WordAlignment::word)
        .def_readwrite("interval", &WordAlignment::interval)
        .def_property_readonly("start", [](const WordAlignment& w) { return w.interval.start; })
        .def_property_readonly("end", [](const WordAlignment& w) { return w.interval.end; })
        .def(py::self == py::self);

    py::class_<EntitySpan>(m, "EntitySpan")
        .def(py::init([](EntityType t, std::size_t a, std::size_t b) { return EntitySpan{t, a, b}; }),
             py::arg("type"), py::arg("token_start"), py::arg("token_end"))
        .def_readwrite("type", &EntitySpan::type)
        .def_readwrite("token_start", &EntitySpan::token_start)
        .def_readwrite("token_end", &EntitySpan::token_end)
        .def(py::self == py::self)
        .def("__repr__", [](const EntitySpan& s) {
            return "EntitySpan(" + std::string(entity_code(s.type)) + ", " + std::to_string(s.token_start) + ", " +
                   std::to_string(s.token_end) + ")";
        });

    py::class_<TimedEntity>(m, "TimedEntity")
        .def(py::init([](EntityType t, double start, double end) {
                 return TimedEntity{t, TimeInterval::make(start, end)};
             }),
             py::arg("type"), py::arg("start"), py::arg("end"))
        .def_readwrite("type", &TimedEntity::type)
        .def_readwrite("interval", &TimedEntity::interval)
        .def_property_readonly("start", [](const TimedEntity& e) { return e.interval.start; })
        .def_property_readonly("end", [](const TimedEntity& e) { return e.interval.end; })
        .def(py::self == py::self);

    py::class_<ConfusionCounts>(m, "ConfusionCounts")
        .def(py::init([](std::size_t tp, std::size_t fp, std::size_t fn) { return ConfusionCounts{tp, fp, fn}; }),
             py::arg("tp") = 0, py::arg("fp") = 0, py::arg("fn") = 0)
        .def_readwrite("tp", &ConfusionCounts::tp)
        .def_readwrite("fp", &ConfusionCounts::fp)
        .def_readwrite("fn", &ConfusionCounts::fn)
        .def_property_readonly("precision", &metrics::precision)
        .def_property_readonly("recall", &metrics::recall)
        .def_property_readonly("f1", [](const ConfusionCounts& c) {
            return metrics::f1(metrics::precision(c), metrics::recall(c));
        })
        .def(py::self + py::self)
        .def(py::self == py::self)
        .def("__repr__", [](const ConfusionCounts& c) {
            return "ConfusionCounts(tp=" + std::to_string(c.tp) + ", fp=" + std::to_string(c.fp) +
                   ", fn=" + std::to_string(c.fn) + ")";
        });

    // formats
    py::class_<formats::TextGridTier>(m, "TextGridTier")
        .def(py::init<>())
        .def(py::init([](std::string name, std::vector<WordAlignment> entries) {
                 return formats::TextGridTier{std::move(name), std::move(entries)};
             }),
             py::arg("name"), py::arg("entries"))
        .def_readwrite("name", &formats::TextGridTier::name)
        .def_readwrite("entries", &formats::TextGridTier::entries);

    py::class_<formats::TextGridDocument>(m, "TextGridDocument")
        .def(py::init<>())
        .def_readwrite("xmin", &formats::TextGridDocument::xmin)
        .def_readwrite("xmax", &formats::TextGridDocument::xmax)
        .def_readwrite("tiers", &formats::TextGridDocument::tiers)
        .def("tier", &formats::TextGridDocument::tier, py::arg("name"), py::return_value_policy::copy)
        .def_property_readonly("tier_names", &formats::TextGridDocument::tier_names);

    m.def("parse_textgrid", [](const py::object& data) { return formats::parse_textgrid(as_bytes(data)); },
          py::arg("data"), "Parse a Praat TextGrid (long or short text form, UTF-8 or UTF-16).");
    m.def("write_textgrid", &formats::write_textgrid, py::arg("doc"));
    m.def("timed_entities_from_tier", &formats::timed_entities_from_tier, py::arg("tier"));

    py::class_<formats::AudioBuffer>(m, "AudioBuffer")
        .def(py::init([](std::uint32_t rate, std::uint16_t channels, std::vector<std::int16_t> samples) {
                 formats::AudioBuffer a{rate, channels, std::move(samples)};
                 a.validate();
                 return a;
             }),
             py::arg("sample_rate"), py::arg("channels"), py::arg("samples"))
        .def_readwrite("sample_rate", &formats::AudioBuffer::sample_rate)
        .def_readwrite("channels", &formats::AudioBuffer::channels)
        .def_readwrite("samples", &formats::AudioBuffer::samples)
        .def_property_readonly("frames", &formats::AudioBuffer::frames)
        .def_property_readonly("duration", &formats::AudioBuffer::duration)
        .def(py::self == py::self);

    m.def("read_wav", [](const py::bytes& data) { return formats::read_wav(data.cast<std::string>()); },
          py::arg("data"));
    m.def("write_wav", [](const formats::AudioBuffer& a) { return py::bytes(formats::write_wav(a)); },
          py::arg("audio"));

    m.def("parse_conll",
          [](const py::object& data) {
              std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> out;
              for (auto& s : formats::parse_conll(as_bytes(data))) out.emplace_back(s.tokens, tags_to_strings(s.tags));
              return out;
          },
          py::arg("data"), "Returns a list of (tokens, tags) pairs.");
    m.def("write_conll",
          [](const std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>& sentences) {
              std::vector<formats::ConllSentence> in;
              for (const auto& [tokens, tags] : sentences) in.push_back({tokens, strings_to_tags(tags)});
              return formats::write_conll(in);
          },
          py::arg("sentences"));

    py::class_<formats::UtteranceEntities>(m, "UtteranceEntities")
        .def(py::init([](std::string id, std::vector<TimedEntity> timed, std::vector<EntitySpan> spans,
                         std::optional<std::vector<std::string>> tokens) {
                 return formats::UtteranceEntities{std::move(id), std::move(timed), std::move(spans), std::move(tokens)};
             }),
             py::arg("id"), py::arg("timed") = std::vector<TimedEntity>{}, py::arg("spans") = std::vector<EntitySpan>{},
             py::arg("tokens") = py::none())
        .def_readwrite("id", &formats::UtteranceEntities::id)
        .def_readwrite("timed", &formats::UtteranceEntities::timed)
        .def_readwrite("spans", &formats::UtteranceEntities::spans)
        .def_readwrite("tokens", &formats::UtteranceEntities::tokens);
    m.def("parse_entities_json", [](const py::object& data) { return formats::parse_entities_json(as_bytes(data)); },
          py::arg("data"));
    m.def("write_entities_json", &formats::write_entities_json, py::arg("utterances"));

    // tagging
    m.def("tokenize", &prep::tokenize_words, py::arg("text"));
    m.def("apply_threshold",
          [](const std::map<std::string, double>& dist, double theta, bool literal_softmax) {
              const auto mode = literal_softmax ? tagging::Renormalization::LiteralSoftmax
                                                : tagging::Renormalization::Proportional;
              return tagging::apply_threshold(LabelDistribution::from_map(dist), theta, mode).to_map();
          },
          py::arg("distribution"), py::arg("theta") = 0.9, py::arg("literal_softmax") = false,
          "Threshold a {tag: probability} distribution on its O probability.");
    m.def("decode_bio",
          [](const std::vector<std::string>& tags, bool strict) {
              return tagging::decode_bio(strings_to_tags(tags),
                                         strict ? tagging::DecodePolicy::Strict : tagging::DecodePolicy::Lenient);
          },
          py::arg("tags"), py::arg("strict") = false);
    m.def("encode_bio",
          [](const std::vector<EntitySpan>& spans, std::size_t n) { return tags_to_strings(tagging::encode_bio(spans, n)); },
          py::arg("spans"), py::arg("token_count"));

    py::class_<tagging::Gazetteer>(m, "Gazetteer")
        .def(py::init<>())
        .def_static("parse", &tagging::Gazetteer::parse, py::arg("lexicon"))
        .def_static("load", &tagging::Gazetteer::load, py::arg("path"))
        .def("add", &tagging::Gazetteer::add, py::arg("type"), py::arg("phrase"))
        .def("find_entities", &tagging::Gazetteer::find_entities, py::arg("tokens"));

    // time alignment and redaction
    m.def("align_spans",
          [](const std::vector<std::string>& tokens, const std::vector<EntitySpan>& spans,
             const std::vector<WordAlignment>& words) {
              return timealign::spans_to_intervals(spans, words, timealign::reconcile(tokens, words));
          },
          py::arg("tokens"), py::arg("spans"), py::arg("words"),
          "Map token spans to time intervals through the word alignment.");
    m.def("redact",
          [](const formats::AudioBuffer& audio, const std::vector<TimedEntity>& entities, double pad,
             const std::string& fill) {
              return redaction::redact(audio, redaction::build_plan(entities, pad, redaction::parse_fill(fill)));
          },
          py::arg("audio"), py::arg("entities"), py::arg("pad") = 0.0, py::arg("fill") = "silence");

    // metrics
    m.def("delta_std", &metrics::delta_std, py::arg("pred"), py::arg("gold"), py::arg("t"));
    m.def("delta_outer", &metrics::delta_outer, py::arg("pred"), py::arg("gold"), py::arg("t"));
    m.def("f1", &metrics::f1, py::arg("precision"), py::arg("recall"));
    m.def("nte_time_counts", &metrics::nte_time_counts, py::arg("pred"), py::arg("gold"), py::arg("t") = 0.25);
    m.def("match_text_spans",
          [](const std::vector<EntitySpan>& pred, const std::vector<EntitySpan>& gold, bool typed) {
              return metrics::match_text_spans(pred, gold,
                                               typed ? metrics::TypeMatching::Typed : metrics::TypeMatching::Untyped);
          },
          py::arg("pred"), py::arg("gold"), py::arg("typed") = true);
    m.def("fa_accuracy",
          [](const std::vector<WordAlignment>& pred, const std::vector<WordAlignment>& gold, double t,
             const std::string& mode) {
              if (mode != "std" && mode != "outer") throw ValidationError("mode must be \"std\" or \"outer\"");
              return metrics::fa_accuracy({{"u", pred}}, {{"u", gold}}, t,
                                          mode == "std" ? metrics::DeltaMode::Std : metrics::DeltaMode::Outer)
                  .accuracy;
          },
          py::arg("pred"), py::arg("gold"), py::arg("t") = 0.25, py::arg("mode") = "outer");

    m.def("run_cli",
          [](const std::vector<std::string>& args) {
              std::vector<const char*> argv{"deid"};
              for (const auto& a : args) argv.push_back(a.c_str());
              std::ostringstream out, err;
              int code;
              {
                  py::gil_scoped_release release;
                  code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
              }
              return py::make_tuple(code, out.str(), err.str());
          },
          py::arg("args"), "Run a deid command line; returns (exit code, stdout, stderr).");
}
