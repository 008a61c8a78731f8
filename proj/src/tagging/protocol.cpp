#include "deid/tagging/protocol.hpp"

#include <json.hpp>

namespace deid::tagging {

using nlohmann::json;

namespace {

json parse_body(std::string_view body, const char* what) {
    try {
        return json::parse(body.begin(), body.end());
    } catch (const json::parse_error& e) {
        throw ProtocolError(std::string(what) + " is not valid JSON: " + e.what());
    }
}

} // namespace

std::string encode_tag_request(const std::vector<Tokens>& sentences) {
    return json{{"sentences", sentences}}.dump();
}

std::vector<Tokens> decode_tag_request(std::string_view body) {
    const json doc = parse_body(body, "request");
    if (!doc.is_object() || !doc.contains("sentences") || !doc["sentences"].is_array()) {
        throw ProtocolError("request must be an object with a \"sentences\" array");
    }
    std::vector<Tokens> out;
    for (const auto& s : doc["sentences"]) {
        if (!s.is_array()) throw ProtocolError("each sentence must be an array of strings");
        Tokens tokens;
        for (const auto& t : s) {
            if (!t.is_string()) throw ProtocolError("each token must be a string");
            tokens.push_back(t.get<std::string>());
        }
        out.push_back(std::move(tokens));
    }
    return out;
}

std::vector<SentenceDistributions> decode_tag_response(std::string_view body,
                                                       const std::vector<Tokens>& request) {
    const json doc = parse_body(body, "response");
    if (!doc.is_object() || !doc.contains("distributions") || !doc["distributions"].is_array()) {
        throw ProtocolError("response must be an object with a \"distributions\" array");
    }
    const json& all = doc["distributions"];
    if (all.size() != request.size()) {
        throw ProtocolError("response has " + std::to_string(all.size()) + " sentences, request had " +
                            std::to_string(request.size()));
    }
    std::vector<SentenceDistributions> out;
    out.reserve(all.size());
    for (std::size_t s = 0; s < all.size(); ++s) {
        const json& sent = all[s];
        if (!sent.is_array() || sent.size() != request[s].size()) {
            throw ProtocolError("sentence " + std::to_string(s) + ": expected " +
                                std::to_string(request[s].size()) + " token distributions");
        }
        SentenceDistributions dists;
        for (std::size_t t = 0; t < sent.size(); ++t) {
            const json& tok = sent[t];
            const std::string where = "sentence " + std::to_string(s) + ", token " + std::to_string(t);
            if (!tok.is_object()) throw ProtocolError(where + ": distribution must be an object");
            std::map<std::string, double> probs;
            for (const auto& [label, value] : tok.items()) {
                if (!value.is_number()) throw ProtocolError(where + ": probability of " + label + " is not a number");
                probs.emplace(label, value.get<double>());
            }
            try {
                dists.push_back(LabelDistribution::from_map(probs, kWireSumTolerance));
            } catch (const ValidationError& e) {
                throw ProtocolError(where + ": " + e.what());
            }
        }
        out.push_back(std::move(dists));
    }
    return out;
}

std::string encode_tag_response(const std::vector<SentenceDistributions>& distributions) {
    json all = json::array();
    for (const auto& sent : distributions) {
        json s = json::array();
        for (const auto& d : sent) s.push_back(d.to_map());
        all.push_back(std::move(s));
    }
    return json{{"distributions", std::move(all)}}.dump();
}

HealthStatus decode_health(std::string_view body) {
    const json doc = parse_body(body, "health response");
    if (!doc.is_object() || !doc.contains("status") || !doc["status"].is_string()) {
        throw ProtocolError("health response must carry a \"status\" string");
    }
    HealthStatus h;
    h.status = doc["status"].get<std::string>();
    if (h.status != "ok") throw ProtocolError("tagger reports status \"" + h.status + "\"");
    if (!doc.contains("labels") || !doc["labels"].is_array()) {
        throw ProtocolError("health response must carry a \"labels\" array");
    }
    for (const auto& l : doc["labels"]) {
        if (!l.is_string() || !parse_label(l.get<std::string>())) {
            throw ProtocolError("health response lists unknown label " + l.dump());
        }
        h.labels.push_back(l.get<std::string>());
    }
    return h;
}

std::string encode_health(const std::vector<std::string>& labels) {
    return json{{"status", "ok"}, {"labels", labels}}.dump();
}

} // namespace deid::tagging
