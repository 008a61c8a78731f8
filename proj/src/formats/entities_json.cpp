#include "deid/formats/entities_json.hpp"

#include <json.hpp>

namespace deid::formats {

using nlohmann::json;

namespace {

const json& member(const json& obj, const char* key, const std::string& where) {
    const auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(0, where + ": missing \"" + key + "\"");
    return *it;
}

double seconds(const json& obj, const char* key, const std::string& where) {
    const json& v = member(obj, key, where);
    if (!v.is_number()) throw ParseError(0, where + ": \"" + key + "\" must be a number");
    return v.get<double>();
}

std::size_t index(const json& obj, const char* key, const std::string& where) {
    const json& v = member(obj, key, where);
    if (!v.is_number_integer() || v.get<long long>() < 0) {
        throw ParseError(0, where + ": \"" + key + "\" must be a non-negative integer");
    }
    return v.get<std::size_t>();
}

} // namespace

std::vector<UtteranceEntities> parse_entities_json(std::string_view bytes) {
    json doc;
    try {
        doc = json::parse(bytes.begin(), bytes.end());
    } catch (const json::parse_error& e) {
        throw ParseError(0, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_array()) throw ParseError(0, "entity file must be a JSON array");

    std::vector<UtteranceEntities> out;
    for (std::size_t u = 0; u < doc.size(); ++u) {
        const json& item = doc[u];
        const std::string where = "utterance " + std::to_string(u);
        if (!item.is_object()) throw ParseError(0, where + ": expected an object");
        const json& id = member(item, "id", where);
        if (!id.is_string()) throw ParseError(0, where + ": \"id\" must be a string");

        UtteranceEntities entry;
        entry.id = id.get<std::string>();
        const json& ents = member(item, "entities", where);
        if (!ents.is_array()) throw ParseError(0, where + ": \"entities\" must be an array");

        for (std::size_t e = 0; e < ents.size(); ++e) {
            const json& ent = ents[e];
            const std::string ewhere = where + " (\"" + entry.id + "\"), entity " + std::to_string(e);
            if (!ent.is_object()) throw ParseError(0, ewhere + ": expected an object");
            const json& type_v = member(ent, "type", ewhere);
            if (!type_v.is_string()) throw ParseError(0, ewhere + ": \"type\" must be a string");
            const auto type = parse_entity_code(type_v.get<std::string>());
            if (!type) {
                throw ParseError(0, ewhere + ": unknown entity type \"" + type_v.get<std::string>() + "\"");
            }
            const bool timed = ent.contains("start_s") || ent.contains("end_s");
            const bool spanned = ent.contains("token_start") || ent.contains("token_end");
            if (timed == spanned) {
                throw ParseError(0, ewhere + ": needs either start_s/end_s or token_start/token_end");
            }
            if (timed) {
                const double start = seconds(ent, "start_s", ewhere);
                const double end = seconds(ent, "end_s", ewhere);
                if (start > end) throw ParseError(0, ewhere + ": start_s > end_s");
                if (start < 0) throw ParseError(0, ewhere + ": negative start_s");
                entry.timed.push_back({*type, {start, end}});
            } else {
                const std::size_t start = index(ent, "token_start", ewhere);
                const std::size_t end = index(ent, "token_end", ewhere);
                if (start >= end) throw ParseError(0, ewhere + ": token_start must be < token_end");
                entry.spans.push_back({*type, start, end});
            }
        }
        if (const auto it = item.find("tokens"); it != item.end()) {
            if (!it->is_array()) throw ParseError(0, where + ": \"tokens\" must be an array");
            std::vector<std::string> tokens;
            for (const auto& t : *it) {
                if (!t.is_string()) throw ParseError(0, where + ": tokens must be strings");
                tokens.push_back(t.get<std::string>());
            }
            entry.tokens = std::move(tokens);
        }
        try {
            if (entry.tokens) {
                validate_spans(entry.spans, entry.tokens->size());
            } else {
                validate_spans(entry.spans);
            }
        } catch (const ValidationError& e) {
            throw ParseError(0, where + ": " + e.what());
        }
        out.push_back(std::move(entry));
    }
    return out;
}

std::string write_entities_json(const std::vector<UtteranceEntities>& utterances) {
    json doc = json::array();
    for (const auto& u : utterances) {
        json ents = json::array();
        for (const auto& t : u.timed) {
            if (!t.interval.valid()) throw ValidationError("invalid interval for utterance " + u.id);
            ents.push_back({{"type", entity_code(t.type)},
                            {"start_s", t.interval.start},
                            {"end_s", t.interval.end}});
        }
        for (const auto& s : u.spans) {
            ents.push_back({{"type", entity_code(s.type)},
                            {"token_start", s.token_start},
                            {"token_end", s.token_end}});
        }
        json item = {{"id", u.id}, {"entities", std::move(ents)}};
        if (u.tokens) item["tokens"] = *u.tokens;
        doc.push_back(std::move(item));
    }
    return doc.dump(2) + "\n";
}

const UtteranceEntities* find_utterance(const std::vector<UtteranceEntities>& entries,
                                        std::string_view id) noexcept {
    for (const auto& e : entries) {
        if (e.id == id) return &e;
    }
    return nullptr;
}

} // namespace deid::formats
